"""JSON-lines file verdict sink."""

import json
import logging
from pathlib import Path
from typing import List

from enumeration.conjectures import ConjectureVerdict
from sinks.verdict_sink import VerdictSink

logger = logging.getLogger(__name__)


class JsonLinesSink(VerdictSink):
    """
    Appends verdicts to a JSON-lines file, one verdict object per line.

    The file and its parent directories are created on first write.

    Attributes:
        path (Path): The output file.

    Args:
        path (str | Path): Where to write.

    Example:
        >>> sink = JsonLinesSink("results/c1.jsonl")
        >>> sink.add_verdicts(found)
    """

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)

    def add_verdicts(self, verdicts: List[ConjectureVerdict]) -> None:
        """Append `verdicts` to the file."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as out:
            for verdict in verdicts:
                out.write(json.dumps(verdict.to_dict()) + "\n")
        logger.info("Wrote %d verdict(s) to %s", len(verdicts), self.path)
