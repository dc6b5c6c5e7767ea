"""Bounded spaces of pure complexes and their exhaustive enumeration."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Set, Tuple

from complexes.core import PureComplex, Simplex, build_complex
from complexes.errors import DimensionOutOfRange
from enumeration.canonical import DEFAULT_PERMUTATION_BUDGET, canonical_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumSpace:
    """
    Bounds of an exhaustive enumeration.

    Attributes:
        n (int): Dimension of the complexes.
        max_facets (int): Most facets per complex.
        max_vertices (int): Most vertices per complex.
        up_to_iso (bool): Yield one complex per isomorphism class.
        min_facets (int): Fewest facets per complex.

    Raises:
        DimensionOutOfRange: If n < 1.
        ValueError: If the bounds are inconsistent.
    """

    n: int
    max_facets: int
    max_vertices: int
    up_to_iso: bool = True
    min_facets: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise DimensionOutOfRange(f"Enumeration needs n >= 1, got {self.n}.")
        if self.max_vertices < self.n + 1:
            raise ValueError(f"max_vertices must be at least n + 1 = {self.n + 1}.")
        if not 1 <= self.min_facets <= self.max_facets:
            raise ValueError("Need 1 <= min_facets <= max_facets.")


Level = List[Tuple[Simplex, ...]]


def _augment(facets: Tuple[Simplex, ...], space: EnumSpace) -> Iterator[Tuple[Simplex, ...]]:
    """Every facet list obtained by adding one facet, possibly on new vertices."""
    p = max(v for f in facets for v in f)
    present = set(facets)
    for fresh in range(space.n + 2):
        if p + fresh > space.max_vertices:
            break
        new_vertices = tuple(range(p + 1, p + fresh + 1))
        for old in combinations(range(1, p + 1), space.n + 1 - fresh):
            facet = old + new_vertices
            if facet not in present:
                yield tuple(sorted(present | {facet}))


def _iso_levels(space: EnumSpace, budget: int) -> Iterator[Tuple[int, Level]]:
    level: Level = [tuple([tuple(range(1, space.n + 2))])]
    yield 1, level
    for size in range(2, space.max_facets + 1):
        seen: Set[Tuple[Simplex, ...]] = set()
        for facets in level:
            for grown in _augment(facets, space):
                seen.add(canonical_form(build_complex(grown), budget))
        level = sorted(seen)
        logger.info("Level %d: %d complexes up to isomorphism", size, len(level))
        yield size, level


def _labelled(space: EnumSpace) -> Iterator[Tuple[Simplex, ...]]:
    for size in range(space.min_facets, space.max_facets + 1):
        for p in range(space.n + 1, space.max_vertices + 1):
            every = set(range(1, p + 1))
            for facets in combinations(combinations(range(1, p + 1), space.n + 1), size):
                if {v for f in facets for v in f} == every:
                    yield facets


def enumerate_complexes(
    space: EnumSpace, budget: int = DEFAULT_PERMUTATION_BUDGET
) -> Iterator[PureComplex]:
    """
    Yield every pure n-complex within the bounds of `space`, deterministically.

    Up to isomorphism, complexes are grown one facet at a time: every
    canonical complex with j facets is extended by each possible facet on
    existing and new vertices, and the results are deduplicated by
    `canonical_form`. Each level is yielded in canonical-form order.

    Otherwise every facet set on the vertex set 1..p exactly is yielded, for
    each p up to `max_vertices`; label sets with gaps are skipped, as they
    relabel to one without gaps.

    Args:
        space (EnumSpace): The bounds.
        budget (int): Labelling-step budget of `canonical_form`.

    Yields:
        PureComplex: The complexes, ordered by facet count.

    Example:
        >>> space = EnumSpace(n=2, max_facets=2, max_vertices=6, min_facets=2)
        >>> len(list(enumerate_complexes(space)))
        3
    """
    if space.up_to_iso:
        for size, level in _iso_levels(space, budget):
            if size >= space.min_facets:
                for facets in level:
                    yield build_complex(facets)
    else:
        for facets in _labelled(space):
            yield build_complex(facets)
