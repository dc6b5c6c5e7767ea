"""Canonical vertex labelling of pure complexes."""

import logging
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Tuple

from complexes.core import PureComplex, Simplex, build_complex
from complexes.errors import TooLarge

logger = logging.getLogger(__name__)

DEFAULT_PERMUTATION_BUDGET = 362880


def twin_classes(K: PureComplex) -> List[List[int]]:
    """
    Vertices grouped by the set of facets containing them.

    Swapping two vertices of one class is an automorphism of K. Classes are
    listed by their smallest vertex; vertices inside a class are increasing.

    Example:
        >>> twin_classes(build_complex([[1, 2, 3], [2, 3, 4]]))
        [[1], [2, 3], [4]]
    """
    grouped: Dict[Tuple[Simplex, ...], List[int]] = {}
    for v in K.vertices:
        grouped.setdefault(K.facets_containing((v,)), []).append(v)
    return sorted(grouped.values())


def _orders(new: List[int], twin_of: Dict[int, int]) -> List[Tuple[int, ...]]:
    """Orderings of `new` that differ by more than a swap of twins."""
    keys = sorted(set(permutations(sorted(twin_of[v] for v in new))))
    orders = []
    for key in keys:
        pools = {c: sorted(v for v in new if twin_of[v] == c) for c in set(key)}
        orders.append(tuple(pools[c].pop(0) for c in key))
    return orders


def canonical_form(
    K: PureComplex, budget: int = DEFAULT_PERMUTATION_BUDGET
) -> Tuple[Simplex, ...]:
    """
    Relabel the vertices of K to 1..p so that the sorted facet list is least.

    The result is the lexicographic minimum of the sorted facet list over all
    vertex relabelings, so isomorphic complexes coincide. It is built facet by
    facet: once labels 1..j are handed out, a facet whose labelled vertices
    sort to A can at best become A followed by j+1, j+2, ..., and no later
    label lowers it. The next facet of the minimum is therefore the least of
    these bounds. Every facet reaching that bound is branched on, together
    with every order of its unlabelled vertices up to swapping twins, and
    branches whose prefix already exceeds the best list are cut.

    Args:
        K (PureComplex): The complex.
        budget (int): Most labelling steps to try.

    Returns:
        Tuple[Simplex, ...]: The canonical facet list.

    Raises:
        TooLarge: If the search takes more than `budget` labelling steps.

    Example:
        >>> canonical_form(build_complex([[5, 9, 7]]))
        ((1, 2, 3),)
        >>> canonical_form(build_complex([[1, 2, 3], [3, 4, 5], [5, 6, 1]]))
        ((1, 2, 3), (1, 4, 5), (2, 4, 6))
    """
    twin_of = {v: i for i, cls in enumerate(twin_classes(K)) for v in cls}
    best: Optional[Tuple[Simplex, ...]] = None
    steps = 0

    def extend(label: Dict[int, int], remaining: FrozenSet[Simplex], prefix: Tuple[Simplex, ...]):
        nonlocal best, steps
        if best is not None and prefix > best[: len(prefix)]:
            return
        if not remaining:
            best = prefix
            return
        fresh = len(label) + 1
        bounds = {}
        for f in remaining:
            known = sorted(label[v] for v in f if v in label)
            bounds[f] = tuple(known) + tuple(range(fresh, fresh + len(f) - len(known)))
        least = min(bounds.values())
        for f in sorted(g for g, bound in bounds.items() if bound == least):
            new = [v for v in f if v not in label]
            for order in _orders(new, twin_of):
                steps += 1
                if steps > budget:
                    raise TooLarge(
                        f"Canonical labelling needs more than {budget} labelling steps."
                    )
                grown = dict(label)
                grown.update((v, fresh + i) for i, v in enumerate(order))
                extend(grown, remaining - {f}, prefix + (least,))

    extend({}, frozenset(K.facets), ())
    logger.debug("Canonical form after %d labelling steps: %s", steps, best)
    return best


def canonical_complex(K: PureComplex, budget: int = DEFAULT_PERMUTATION_BUDGET) -> PureComplex:
    """The complex rebuilt on its canonical labels."""
    return build_complex(canonical_form(K, budget))
