"""Premises and verdicts of the tree-count conjectures."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from certify.definition import certify_by_definition
from complexes.core import PureComplex, Simplex, dewdney_count_formula, tree_count_formula
from complexes.cycles import find_circuit, find_cycle
from enumeration.canonical import DEFAULT_PERMUTATION_BUDGET, canonical_form

logger = logging.getLogger(__name__)


class Conjecture(str, Enum):
    """
    The conjectured tree characterizations under test.

    NO_CIRCUITS_SOME_K: no (m,n)-circuit and Dewdney's k-count for some 1 <= k <= m.
    NO_CIRCUITS_EACH_K: no (m,n)-circuit and Dewdney's k-count for each 1 <= k <= m.
    ACYCLIC_TOP_COUNT: no (m,n)-simplicial cycle for some m, the tree k-count
        for some 1 <= k <= n - 1, and p - n facets.

    Both circuit conjectures are tested at m = n - 1.
    """

    NO_CIRCUITS_SOME_K = "c1"
    NO_CIRCUITS_EACH_K = "c2"
    ACYCLIC_TOP_COUNT = "new"


class Status(str, Enum):
    CONSISTENT = "consistent"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class ConjectureVerdict:
    """
    Outcome of testing one conjecture on one complex.

    The "if" direction is under test: premises that hold on a complex that is
    not a tree make it a counterexample. The converse direction is recorded
    in `converse_holds` but never makes a counterexample.

    Attributes:
        conjecture (Conjecture): The conjecture tested.
        complex (PureComplex): The complex, as given.
        canonical (Tuple[Simplex, ...]): Its canonical facet list.
        premises_hold (bool): Whether every premise holds.
        is_tree (bool): Whether the complex is a simplicial tree.
    """

    conjecture: Conjecture
    complex: PureComplex
    canonical: Tuple[Simplex, ...]
    premises_hold: bool
    is_tree: bool

    @property
    def status(self) -> Status:
        if self.premises_hold and not self.is_tree:
            return Status.COUNTEREXAMPLE
        return Status.CONSISTENT

    @property
    def converse_holds(self) -> bool:
        return self.premises_hold or not self.is_tree

    def to_dict(self) -> Dict:
        return {
            "conjecture": self.conjecture.value,
            "facets": [list(f) for f in self.complex.facets],
            "canonical": [list(f) for f in self.canonical],
            "premises_hold": self.premises_hold,
            "is_tree": self.is_tree,
            "converse_holds": self.converse_holds,
            "status": self.status.value,
        }


def _dewdney_matches(K: PureComplex, k: int) -> bool:
    m = K.n - 1
    return dewdney_count_formula(len(K.faces[0]), m, K.n, k) == len(K.faces[k])


def premises_hold(K: PureComplex, which: Conjecture) -> bool:
    """
    Evaluate the premises of a conjecture on K.

    Args:
        K (PureComplex): The complex.
        which (Conjecture): The conjecture.

    Returns:
        bool: True when every premise holds.
    """
    n = K.n
    p = len(K.faces[0])
    match which:
        case Conjecture.NO_CIRCUITS_SOME_K:
            counts = any(_dewdney_matches(K, k) for k in range(1, n))
            return counts and find_circuit(K, n - 1) is None
        case Conjecture.NO_CIRCUITS_EACH_K:
            counts = all(_dewdney_matches(K, k) for k in range(1, n))
            return counts and find_circuit(K, n - 1) is None
        case Conjecture.ACYCLIC_TOP_COUNT:
            if len(K.faces[n]) != p - n:
                return False
            if not any(len(K.faces[k]) == tree_count_formula(p, n, k) for k in range(1, n)):
                return False
            return any(find_cycle(K, m) is None for m in range(n))
        case _:
            raise ValueError(f"Unsupported conjecture '{which}'")


def test_conjecture(
    K: PureComplex, which: Conjecture, budget: int = DEFAULT_PERMUTATION_BUDGET
) -> ConjectureVerdict:
    """
    Test one conjecture on K.

    Example:
        >>> verdict = test_conjecture(build_complex([[1, 2, 3], [3, 4, 5], [1, 5, 6]]), Conjecture.NO_CIRCUITS_SOME_K)
        >>> verdict.status
        <Status.COUNTEREXAMPLE: 'counterexample'>
    """
    verdict = ConjectureVerdict(
        conjecture=which,
        complex=K,
        canonical=canonical_form(K, budget),
        premises_hold=premises_hold(K, which),
        is_tree=certify_by_definition(K),
    )
    logger.debug("%s on %s: %s", which.value, K.facets, verdict.status.value)
    return verdict


test_conjecture.__test__ = False
