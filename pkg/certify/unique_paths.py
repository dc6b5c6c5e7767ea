"""Simplicial tree certification by uniqueness of reduced path sequences."""

import logging
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Dict, Optional, Tuple

from certify.tree_certifier import TreeCertifier
from complexes.core import PureComplex, is_face, joint_simplices
from complexes.cycles import CycleWitness, find_cycle
from complexes.paths import AltSequence, is_connected, iter_reduced_paths

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UniquePathsConditions:
    """
    The three conditions of the unique-path characterization, evaluated separately.

    Attributes:
        unique_top_paths (bool): Every two (n-1)-simplices are joined by
            exactly one reduced (n-1,n)-path sequence.
        unique_lower_closures (bool): For m <= n - 2, every two m-simplices
            that are not faces of a common joint (n-1)-simplex are joined by
            reduced path sequences that all span the same facets.
        no_lower_cycles (bool): No (m,n)-simplicial cycle exists for m <= n - 2.
        duplicate (Optional[Tuple[AltSequence, AltSequence]]): Two reduced
            path sequences violating one of the uniqueness conditions.
        cycle (Optional[CycleWitness]): A lower-dimensional cycle, if any.
    """

    unique_top_paths: bool
    unique_lower_closures: bool
    no_lower_cycles: bool
    duplicate: Optional[Tuple[AltSequence, AltSequence]] = None
    cycle: Optional[CycleWitness] = None

    @property
    def holds(self) -> bool:
        return self.unique_top_paths and self.unique_lower_closures and self.no_lower_cycles

    def to_dict(self) -> Dict:
        return {
            "unique_top_paths": self.unique_top_paths,
            "unique_lower_closures": self.unique_lower_closures,
            "no_lower_cycles": self.no_lower_cycles,
        }


def _top_duplicate(K: PureComplex) -> Optional[Tuple[AltSequence, AltSequence]]:
    for a, b in combinations(sorted(K.faces[K.n - 1]), 2):
        found = list(islice(iter_reduced_paths(K, a, b), 2))
        if len(found) == 2:
            return found[0], found[1]
    return None


def _lower_duplicate(K: PureComplex) -> Optional[Tuple[AltSequence, AltSequence]]:
    joint_ridges = joint_simplices(K, K.n - 1)
    for m in range(K.n - 1):
        for a, b in combinations(sorted(K.faces[m]), 2):
            if any(is_face(a, r) and is_face(b, r) for r in joint_ridges):
                continue
            first = None
            for seq in iter_reduced_paths(K, a, b):
                if first is None:
                    first = seq
                elif set(seq.etas) != set(first.etas):
                    return first, seq
    return None


def unique_paths_conditions(K: PureComplex) -> UniquePathsConditions:
    """
    Evaluate the three unique-path conditions on K.

    Reduced path sequences are enumerated exhaustively; each never repeats a
    facet, so the enumeration is finite. Two reduced (m,n)-path sequences span
    the same simplicial path exactly when they use the same facets.

    Args:
        K (PureComplex): The complex.

    Returns:
        UniquePathsConditions: The three verdicts and any witnesses found.
    """
    top = _top_duplicate(K)
    lower = _lower_duplicate(K)
    cycle = next(
        (c for c in (find_cycle(K, m) for m in range(K.n - 1)) if c is not None),
        None,
    )
    conditions = UniquePathsConditions(
        unique_top_paths=top is None,
        unique_lower_closures=lower is None,
        no_lower_cycles=cycle is None,
        duplicate=top or lower,
        cycle=cycle,
    )
    logger.debug("Unique path conditions: %s", conditions.to_dict())
    return conditions


def certify_by_unique_paths(K: PureComplex) -> bool:
    """
    Decide tree-ness from uniqueness of reduced paths.

    A connected complex is a tree exactly when all three conditions of
    `unique_paths_conditions` hold. Disconnected complexes are never trees.

    Example:
        >>> certify_by_unique_paths(build_complex([[1, 2, 3], [2, 3, 4]]))
        True
    """
    return is_connected(K) and unique_paths_conditions(K).holds


class UniquePathsCertifier(TreeCertifier):
    """Certifies trees by uniqueness of reduced path sequences."""

    name = "by_unique_paths"

    def examine(self, K: PureComplex) -> Tuple[bool, UniquePathsConditions]:
        conditions = unique_paths_conditions(K)
        return is_connected(K) and conditions.holds, conditions
