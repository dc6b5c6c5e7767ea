"""Simplicial tree certification by an (n-1)-complete ordering of the facets."""

import logging
from typing import FrozenSet, List, Optional, Set, Tuple

from certify.tree_certifier import TreeCertifier
from complexes.core import PureComplex, Simplex, attachment_among, is_simplex_closure
from complexes.paths import Ordering

logger = logging.getLogger(__name__)


def certify_by_complete_ordering(K: PureComplex) -> Optional[Ordering]:
    """
    Search for an (n-1)-complete ordering of the facets of K.

    In such an ordering every facet after the first meets the facets before
    it in exactly the closure of one (n-1)-simplex. The search extends the
    ordering with any facet meeting that condition, in lexicographic order,
    and backtracks when it gets stuck. Whether a facet may come next depends
    only on the set of facets already placed, so failed sets are remembered.

    Args:
        K (PureComplex): The complex.

    Returns:
        Optional[Ordering]: A complete ordering, or None if K has none. A
            complete ordering exists exactly when K is a simplicial tree.

    Example:
        >>> certify_by_complete_ordering(build_complex([[1, 2, 3], [2, 3, 4], [2, 4, 5]])).facets
        ((1, 2, 3), (2, 3, 4), (2, 4, 5))
    """
    dead_ends: Set[FrozenSet[Simplex]] = set()
    placed: List[Simplex] = []

    def extend() -> bool:
        if len(placed) == len(K.facets):
            return True
        key = frozenset(placed)
        if key in dead_ends:
            return False
        for f in K.facets:
            if f in key:
                continue
            if placed and not is_simplex_closure(attachment_among(f, placed), K.n):
                continue
            placed.append(f)
            if extend():
                return True
            placed.pop()
        dead_ends.add(key)
        return False

    if not extend():
        logger.debug("No complete ordering after %d dead ends", len(dead_ends))
        return None
    return Ordering(facets=tuple(placed), complete=True)


class CompleteOrderingCertifier(TreeCertifier):
    """Certifies trees by exhibiting an (n-1)-complete ordering."""

    name = "by_complete_ordering"

    def examine(self, K: PureComplex) -> Tuple[bool, Optional[Ordering]]:
        ordering = certify_by_complete_ordering(K)
        return ordering is not None, ordering
