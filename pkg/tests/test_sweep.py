"""
Exhaustive checks of the tree characterizations over enumerated complexes.

The default run covers pure 2-complexes with at most 4 facets on at most 7
vertices. Set SIMPLICIAL_FULL_SWEEP=1 for at most 5 facets on at most 8
vertices, plus the 3-dimensional spot check on 4 facets.
"""

import logging
import os
from itertools import combinations
from typing import List

import pytest

from certify.lemmas import count_bounds
from certify.report import cross_certify
from complexes.core import (
    PureComplex,
    all_simplices,
    build_complex,
    clique_complex,
    one_skeleton_graph,
    tree_count_formula,
)
from complexes.cycles import find_circuit, find_cycle, joint_cyclicity_premise
from complexes.paths import (
    PathRelation,
    compare_paths,
    components,
    find_ordering,
    find_path,
    find_reduced_path,
    is_connected,
    iter_reduced_paths,
    validate_path,
    validate_reduced_path,
)
from enumeration.conjectures import Conjecture
from enumeration.search import search_counterexamples
from enumeration.space import EnumSpace, enumerate_complexes

FULL = os.getenv("SIMPLICIAL_FULL_SWEEP") == "1"

pytestmark = pytest.mark.sweep

SPACE = (
    EnumSpace(n=2, max_facets=5, max_vertices=8)
    if FULL
    else EnumSpace(n=2, max_facets=4, max_vertices=7)
)
SPOT_SPACE = (
    EnumSpace(n=3, max_facets=4, max_vertices=8)
    if FULL
    else EnumSpace(n=3, max_facets=3, max_vertices=6)
)


@pytest.fixture(scope="module")
def swept() -> List[PureComplex]:
    return list(enumerate_complexes(SPACE))


@pytest.fixture(scope="module")
def reports(swept):
    return {K: cross_certify(K) for K in swept}


def test_certifiers_agree(reports):
    disagreements = [K.facets for K, report in reports.items() if not report.agree]
    assert disagreements == []


def test_tree_counts(reports):
    for K, report in reports.items():
        p = len(K.faces[0])
        counts = [len(K.faces[k]) for k in range(1, K.n + 1)]
        formulas = [tree_count_formula(p, K.n, k) for k in range(1, K.n + 1)]
        if report.is_tree:
            assert counts == formulas, K.facets
        elif is_connected(K):
            assert all(c > f for c, f in zip(counts[:-1], formulas[:-1])), K.facets


def test_count_bounds(reports):
    for K, report in reports.items():
        bounds = count_bounds(K)
        assert bounds.holds, K.facets
        if is_connected(K):
            lower = bounds["connected_count_k1"]
            assert lower.tight == report.is_tree, K.facets
        if report.is_tree:
            assert bounds.top_tight, K.facets


def test_cycles_propagate_down(swept):
    for K in swept:
        if find_cycle(K, K.n - 1) is not None:
            assert all(find_cycle(K, m) is not None for m in range(K.n - 1)), K.facets


def test_top_circuits_are_cycles(swept):
    for K in swept:
        assert (find_circuit(K, K.n - 1) is None) == (find_cycle(K, K.n - 1) is None), K.facets


def test_joint_premise_forces_cycle(swept):
    for K in swept:
        if is_connected(K):
            premise = joint_cyclicity_premise(K)
            if premise is not None:
                assert find_cycle(K, premise[0]) is not None, K.facets


def test_dependent_paths_coincide_when_acyclic(reports):
    for K, report in reports.items():
        if report.witnesses.cycle is not None:
            continue
        for a, b in combinations(K.simplices(K.n - 1), 2):
            found = list(iter_reduced_paths(K, a, b))
            for x, y in combinations(found, 2):
                relation = compare_paths(x, y, K)
                if relation is not PathRelation.INDEPENDENT:
                    assert x == y, K.facets


def test_tree_skeletons_are_clique_complexes(reports):
    for K, report in reports.items():
        if report.is_tree:
            assert clique_complex(one_skeleton_graph(K)) == all_simplices(K), K.facets


def test_ordering_exists_iff_connected(swept):
    for K in swept:
        assert (find_ordering(K) is not None) == is_connected(K), K.facets


def test_components_are_maximal_connected_classes(swept):
    for K in swept:
        classes = components(K)
        assert sorted(f for cls in classes for f in cls) == list(K.facets), K.facets
        for cls in classes:
            assert is_connected(build_complex(cls)), K.facets
            for g in K.facets:
                if g not in cls:
                    assert not is_connected(build_complex([*cls, g])), K.facets


def test_connected_complexes_have_all_paths(swept):
    for K in swept:
        if not is_connected(K):
            continue
        for a, b in combinations(K.simplices(K.n - 1), 2):
            path = find_path(K, a, b)
            assert path is not None and validate_path(path, K), K.facets
        for m in range(K.n):
            for a, b in combinations(K.simplices(m), 2):
                reduced = find_reduced_path(K, a, b)
                assert reduced is not None, (K.facets, a, b)
                assert validate_reduced_path(reduced, K) is not None, (K.facets, a, b)


def test_spot_check_three_dimensions():
    for K in enumerate_complexes(SPOT_SPACE):
        if find_cycle(K, 2) is not None:
            assert all(find_cycle(K, m) is not None for m in range(2)), K.facets
        assert cross_certify(K).agree, K.facets


@pytest.mark.parametrize("which", [Conjecture.NO_CIRCUITS_SOME_K, Conjecture.NO_CIRCUITS_EACH_K])
def test_circuit_conjecture_counterexamples_are_disconnected(which):
    found = search_counterexamples(EnumSpace(n=2, max_facets=3, max_vertices=9), which)
    assert found
    for verdict in found:
        assert not is_connected(verdict.complex)
        assert find_circuit(verdict.complex, 1) is None


def test_acyclic_top_count_conjecture(caplog):
    # Hits are findings for the WARNING log, not failures.
    with caplog.at_level(logging.WARNING, logger="enumeration.search"):
        found = search_counterexamples(
            EnumSpace(n=2, max_facets=4, max_vertices=8), Conjecture.ACYCLIC_TOP_COUNT
        )
    reported = [r for r in caplog.records if r.getMessage().startswith("Counterexample")]
    assert len(reported) == len(found)
    for verdict in found:
        assert verdict.premises_hold
        assert not cross_certify(verdict.complex).is_tree
