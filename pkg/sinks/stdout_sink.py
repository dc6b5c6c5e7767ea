"""Stdout verdict sink."""

import json
from typing import List

from enumeration.conjectures import ConjectureVerdict
from sinks.verdict_sink import VerdictSink


class StdoutSink(VerdictSink):
    """Prints each verdict to stdout as one JSON line."""

    def add_verdicts(self, verdicts: List[ConjectureVerdict]) -> None:
        for verdict in verdicts:
            print(json.dumps(verdict.to_dict()), flush=True)
