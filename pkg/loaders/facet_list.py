"""Facet-list document loader for pure simplicial complexes."""

import json
import logging
from pathlib import Path
from typing import Any, Dict

from complexes.core import PureComplex, build_complex, dimension, simplex
from complexes.errors import MalformedInput, MixedDimension, TooLarge
from config import Config

logger = logging.getLogger(__name__)


class FacetListLoader:
    """
    Loads pure complexes from facet-list JSON documents.

    A facet-list document is `{"n": <int>, "facets": [[v, ...], ...]}` with
    integer vertex ids; facets may be given in any order and are
    canonicalized. The declared `n` must match the dimension of every facet,
    and the complex must stay within the configured desk-scale limits.

    Attributes:
        config (Config): Configuration supplying `max_vertices` and `max_dimension`.

    Example:
        >>> loader = FacetListLoader(Config.load())
        >>> K = loader.load(Path("three_components.json"))
        >>> K.n, len(K.facets)
        (2, 6)
    """

    def __init__(self, config: Config):
        """
        Initializes the loader with its limits.

        Args:
            config (Config): Application-level configuration object.
        """
        self.config = config

    def load(self, path: Path) -> PureComplex:
        """
        Read and build the complex stored at `path`.

        Raises:
            MalformedInput: If the file cannot be read or is not a facet-list document.
            MixedDimension: If a facet disagrees with the declared dimension.
            TooLarge: If the complex exceeds the configured limits.
        """
        logger.info("Loading facet list %s", path)
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise MalformedInput(f"Cannot read {path}: {e}") from e
        return self.loads(text)

    def loads(self, text: str) -> PureComplex:
        """Build the complex from a facet-list JSON string."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"Facet list is not valid JSON: {e}") from e
        return self.from_dict(doc)

    def from_dict(self, doc: Dict[str, Any]) -> PureComplex:
        """Build the complex from an already parsed facet-list document."""
        if not isinstance(doc, dict) or "facets" not in doc:
            raise MalformedInput('A facet list must be an object with a "facets" array.')
        facets = doc["facets"]
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise MalformedInput('"facets" must be an array of vertex arrays.')

        declared = doc.get("n")
        if declared is not None and (isinstance(declared, bool) or not isinstance(declared, int)):
            raise MalformedInput('"n" must be an integer.')

        canonical = [simplex(f) for f in facets]
        if declared is not None:
            for f in canonical:
                if dimension(f) != declared:
                    raise MixedDimension(
                        f"Facet {list(f)} has dimension {dimension(f)}, declared n is {declared}."
                    )

        vertices = {v for f in canonical for v in f}
        if len(vertices) > self.config.max_vertices:
            raise TooLarge(
                f"{len(vertices)} vertices exceed MAX_VERTICES={self.config.max_vertices}."
            )
        top = max((dimension(f) for f in canonical), default=0)
        if top > self.config.max_dimension:
            raise TooLarge(f"Dimension {top} exceeds MAX_DIMENSION={self.config.max_dimension}.")

        return build_complex(canonical)
