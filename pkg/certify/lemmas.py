"""Count bounds, complete-subcomplex containment and inductive growth of simplicial trees."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx

from certify.definition import certify_by_definition
from complexes.core import (
    PureComplex,
    Simplex,
    build_complex,
    one_skeleton_graph,
    simplex,
    tree_count_formula,
)
from complexes.cycles import find_circuit, find_cycle
from complexes.errors import InvalidSimplex, NotATree
from complexes.paths import is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundCheck:
    """One bound: whether its premise holds, whether its inequality holds."""

    name: str
    premise: bool
    conclusion: bool
    tight: bool = False

    @property
    def holds(self) -> bool:
        return not self.premise or self.conclusion

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "premise": self.premise,
            "conclusion": self.conclusion,
            "holds": self.holds,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class BoundsReport:
    """
    Every count bound evaluated on one complex.

    Attributes:
        checks (Tuple[BoundCheck, ...]): The individual bounds.
        top_tight (bool): Whether alpha_{n-1} = n * alpha_n + 1.
        tight_premise (bool): Connected with no (n-1,n)-circuit, which forces
            `top_tight`.
    """

    checks: Tuple[BoundCheck, ...]
    top_tight: bool
    tight_premise: bool

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks) and (self.top_tight or not self.tight_premise)

    def __getitem__(self, name: str) -> BoundCheck:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> Dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "top_tight": self.top_tight,
            "tight_premise": self.tight_premise,
            "holds": self.holds,
        }


def count_bounds(K: PureComplex) -> BoundsReport:
    """
    Evaluate the count bounds on K.

    Checks, each as a premise and a conclusion:

    * `acyclic_top_lower`: no (n-1,n)-simplicial cycle implies
      alpha_{n-1} >= n * alpha_n + 1.
    * `connected_top_upper`: connected implies alpha_{n-1} <= n * alpha_n + 1.
    * `connected_count_k<k>` for 1 <= k <= n - 1: connected implies
      alpha_k >= (p - n) * C(n, k) + C(n, k + 1), tight only on trees.

    Example:
        >>> report = count_bounds(build_complex([[1, 2, 3], [2, 3, 4], [2, 4, 5]]))
        >>> report["connected_top_upper"].tight
        True
    """
    n = K.n
    p = len(K.faces[0])
    top, ridges = len(K.faces[n]), len(K.faces[n - 1])
    connected = is_connected(K)
    no_top_cycle = find_cycle(K, n - 1) is None
    tight = ridges == n * top + 1

    checks: List[BoundCheck] = [
        BoundCheck("acyclic_top_lower", no_top_cycle, ridges >= n * top + 1, tight),
        BoundCheck("connected_top_upper", connected, ridges <= n * top + 1, tight),
    ]
    for k in range(1, n):
        formula = tree_count_formula(p, n, k)
        count = len(K.faces[k])
        checks.append(
            BoundCheck(f"connected_count_k{k}", connected, count >= formula, count == formula)
        )

    report = BoundsReport(
        checks=tuple(checks),
        top_tight=tight,
        tight_premise=connected and find_circuit(K, n - 1) is None,
    )
    if not report.holds:
        logger.error("Count bound violated on %s: %s", K.facets, report.to_dict())
    return report


def complete_subcomplex_violations(K: PureComplex) -> List[Tuple[Simplex, int]]:
    """
    Find k-complete subcomplexes on at most n + 1 vertices lying in no facet.

    A vertex set V with k + 1 <= |V| <= n + 1 spans a k-complete subcomplex
    when every (k + 1)-subset of V is a simplex of K. Every such V is a clique
    of the 1-skeleton, so only those cliques are examined.

    Returns:
        List[Tuple[Simplex, int]]: Each offending vertex set with the largest
            k for which it is k-complete.
    """
    violations = []
    for clique in nx.enumerate_all_cliques(one_skeleton_graph(K)):
        if len(clique) > K.n + 1:
            break
        if len(clique) < 2:
            continue
        vertices = simplex(clique)
        if K.contains(vertices):
            continue
        complete_ks = [
            k
            for k in range(1, len(vertices))
            if all(K.contains(s) for s in combinations(vertices, k + 1))
        ]
        if complete_ks:
            violations.append((vertices, max(complete_ks)))
    return sorted(violations)


def check_complete_subcomplex_containment(K: PureComplex, diagnostic: bool = False) -> bool:
    """
    Check that every small k-complete subcomplex of a tree lies in one facet.

    Args:
        K (PureComplex): A simplicial tree, or any complex in diagnostic mode.
        diagnostic (bool): Skip the tree precondition; the verdict is then
            informative only.

    Returns:
        bool: True iff no violation exists.

    Raises:
        NotATree: If K is not a tree and `diagnostic` is off.
    """
    if not diagnostic and not certify_by_definition(K):
        raise NotATree("Complete-subcomplex containment is only asserted for trees.")
    violations = complete_subcomplex_violations(K)
    for vertices, k in violations:
        logger.info("%d-complete subcomplex on %s lies in no facet", k, list(vertices))
    return not violations


def is_tree_extension(K: PureComplex, facet: Simplex) -> bool:
    """
    True when `facet` brings exactly one new vertex and meets K in one (n-1)-face.

    Adding such a facet to a simplicial tree gives a simplicial tree.
    """
    if len(facet) != K.n + 1 or facet in K.facet_set:
        return False
    known = set(K.vertices)
    new = [v for v in facet if v not in known]
    if len(new) != 1:
        return False
    return K.contains(tuple(v for v in facet if v in known))


def extend_tree(K: PureComplex, facet: Simplex) -> PureComplex:
    """
    Grow a simplicial tree by one facet.

    Raises:
        NotATree: If K is not a simplicial tree.
        InvalidSimplex: If `facet` is not a tree extension of K.

    Example:
        >>> extend_tree(build_complex([[1, 2, 3]]), (2, 3, 4)).facets
        ((1, 2, 3), (2, 3, 4))
    """
    facet = simplex(facet)
    if not certify_by_definition(K):
        raise NotATree("Only simplicial trees can be grown facet by facet.")
    if not is_tree_extension(K, facet):
        raise InvalidSimplex(
            f"{list(facet)} must add one new vertex to an existing (n-1)-face."
        )
    return build_complex([*K.facets, facet])
