"""Loaders for alternating sequences and simplex arguments."""

import json
import logging
from pathlib import Path
from typing import Any

from complexes.core import Simplex, simplex
from complexes.errors import InvalidSequence, MalformedInput
from complexes.paths import AltSequence

logger = logging.getLogger(__name__)


def parse_simplex(text: str) -> Simplex:
    """
    Parse a simplex given as `"1,2,3"` or as a JSON array `"[1, 2, 3]"`.

    Raises:
        MalformedInput: If the text is neither form.

    Example:
        >>> parse_simplex("3, 1,2")
        (1, 2, 3)
    """
    stripped = text.strip()
    try:
        if stripped.startswith("["):
            raw = json.loads(stripped)
        else:
            raw = [int(part) for part in stripped.split(",") if part.strip()]
    except (json.JSONDecodeError, ValueError) as e:
        raise MalformedInput(f"Cannot parse simplex '{text}': {e}") from e
    if not isinstance(raw, list):
        raise MalformedInput(f"Simplex '{text}' must be a list of vertex ids.")
    return simplex(raw)


def sequence_from_dict(doc: Any) -> AltSequence:
    """
    Build an AltSequence from `{"m": <int>, "items": [[...], ...]}`.

    Raises:
        MalformedInput: If the document does not have that shape.
        InvalidSequence: If the items do not alternate as declared.
    """
    if not isinstance(doc, dict) or not isinstance(doc.get("items"), list):
        raise MalformedInput('A sequence must be an object with an "items" array.')
    items = tuple(simplex(item) for item in doc["items"])
    seq = AltSequence.of(items)
    if "m" in doc and doc["m"] != seq.m:
        raise InvalidSequence(f"Declared m={doc['m']} but the first item has dimension {seq.m}.")
    return seq


def parse_sequence(text: str) -> AltSequence:
    """Build an AltSequence from its JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"Sequence is not valid JSON: {e}") from e
    return sequence_from_dict(doc)


def load_sequence(path: Path) -> AltSequence:
    """
    Read a sequence document from `path`.

    Raises:
        MalformedInput: If the file cannot be read or is not a sequence document.
        InvalidSequence: If the items do not alternate as declared.
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MalformedInput(f"Cannot read sequence file {path}: {e}") from e
    logger.info("Loaded sequence document %s", path)
    return parse_sequence(text)
