import json
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from complexes.core import build_complex
from complexes.errors import DimensionOutOfRange, TooLarge
from enumeration.canonical import canonical_complex, canonical_form, twin_classes
from enumeration.conjectures import (
    Conjecture,
    Status,
    premises_hold,
    test_conjecture,
)
from enumeration.search import CHUNKS_PER_WORKER, search_counterexamples, split_work
from enumeration.space import EnumSpace, enumerate_complexes
from sinks.jsonl_sink import JsonLinesSink
from sinks.verdict_sink import VerdictSink
from tests.strategies import pure_complexes, relabelled

LINKED_TRIANGLES_FORM = ((1, 2, 3), (1, 4, 5), (2, 4, 6))


def brute_force_form(K):
    forms = []
    for images in permutations(range(1, len(K.vertices) + 1)):
        label = dict(zip(K.vertices, images))
        forms.append(tuple(sorted(tuple(sorted(label[v] for v in f)) for f in K.facets)))
    return min(forms)


class CollectingSink(VerdictSink):
    def __init__(self):
        self.verdicts = []

    def add_verdicts(self, verdicts):
        self.verdicts.extend(verdicts)


class TestCanonicalForm:
    def test_single_facet(self):
        assert canonical_form(build_complex([[5, 9, 7]])) == ((1, 2, 3),)

    def test_vertex_linked_triangles(self, vertex_linked_triangles):
        assert canonical_form(vertex_linked_triangles) == LINKED_TRIANGLES_FORM

    def test_scrambled_fan_tree(self, fan_tree):
        label = {1: 7, 2: 3, 3: 9, 4: 1, 5: 4}
        scrambled = build_complex([[label[v] for v in f] for f in fan_tree.facets])
        assert canonical_form(scrambled) == canonical_form(fan_tree)

    def test_non_isomorphic(self, strip_tree, linked_strips):
        assert canonical_form(strip_tree) != canonical_form(linked_strips)

    def test_least_over_all_relabelings(self):
        K = build_complex([[1, 2, 3], [3, 4, 5], [5, 6, 1]])
        assert canonical_form(K) == LINKED_TRIANGLES_FORM
        assert canonical_form(K) == brute_force_form(K)

    def test_twin_classes(self, fan_tree):
        assert twin_classes(build_complex([[1, 2, 3], [2, 3, 4]])) == [[1], [2, 3], [4]]
        assert twin_classes(fan_tree) == [[1], [2], [3], [4], [5]]

    def test_disjoint_copies_stay_within_budget(self):
        K = build_complex([[3 * i + 1, 3 * i + 2, 3 * i + 3] for i in range(5)])
        assert canonical_form(K, budget=1000) == K.facets

    def test_budget(self, vertex_linked_triangles):
        with pytest.raises(TooLarge):
            canonical_form(vertex_linked_triangles, budget=5)

    def test_canonical_complex(self, fan_tree):
        K = canonical_complex(fan_tree)
        assert K.vertices == (1, 2, 3, 4, 5)
        assert K.facets == canonical_form(fan_tree)

    @given(pure_complexes(max_vertices=6, max_facets=4))
    def test_matches_brute_force(self, K):
        assert canonical_form(K) == brute_force_form(K)

    @given(st.data())
    def test_invariant_under_relabeling(self, data):
        K = data.draw(pure_complexes(max_facets=4))
        copy = data.draw(relabelled(K))
        assert canonical_form(copy) == canonical_form(K)


class TestEnumSpace:
    def test_rejects_dimension_zero(self):
        with pytest.raises(DimensionOutOfRange):
            EnumSpace(n=0, max_facets=2, max_vertices=4)

    def test_rejects_too_few_vertices(self):
        with pytest.raises(ValueError):
            EnumSpace(n=2, max_facets=2, max_vertices=2)

    def test_rejects_facet_bounds(self):
        with pytest.raises(ValueError):
            EnumSpace(n=2, max_facets=2, max_vertices=6, min_facets=3)


class TestEnumerate:
    def test_one_triangle(self):
        found = list(enumerate_complexes(EnumSpace(n=2, max_facets=1, max_vertices=3)))
        assert [K.facets for K in found] == [((1, 2, 3),)]

    def test_two_triangles(self):
        space = EnumSpace(n=2, max_facets=2, max_vertices=6, min_facets=2)
        found = [K.facets for K in enumerate_complexes(space)]
        assert found == [
            ((1, 2, 3), (1, 2, 4)),
            ((1, 2, 3), (1, 4, 5)),
            ((1, 2, 3), (4, 5, 6)),
        ]

    def test_vertex_bound(self):
        space = EnumSpace(n=2, max_facets=2, max_vertices=5, min_facets=2)
        assert len(list(enumerate_complexes(space))) == 2

    def test_three_edge_graphs(self):
        space = EnumSpace(n=1, max_facets=3, max_vertices=6, min_facets=3)
        assert len(list(enumerate_complexes(space))) == 5

    def test_all_sizes(self):
        space = EnumSpace(n=1, max_facets=3, max_vertices=6)
        assert len(list(enumerate_complexes(space))) == 1 + 2 + 5

    def test_deterministic(self):
        space = EnumSpace(n=2, max_facets=3, max_vertices=7)
        first = [K.facets for K in enumerate_complexes(space)]
        assert first == [K.facets for K in enumerate_complexes(space)]

    @pytest.mark.parametrize(
        "n,max_facets,max_vertices",
        [(1, 3, 5), (1, 4, 5), (2, 2, 6), (2, 3, 6)],
    )
    def test_labelled_dedup_matches_iso(self, n, max_facets, max_vertices):
        iso = EnumSpace(n=n, max_facets=max_facets, max_vertices=max_vertices)
        labelled = EnumSpace(
            n=n, max_facets=max_facets, max_vertices=max_vertices, up_to_iso=False
        )
        iso_forms = {K.facets for K in enumerate_complexes(iso)}
        labelled_forms = {canonical_form(K) for K in enumerate_complexes(labelled)}
        assert iso_forms == labelled_forms

    def test_yields_canonical_pure_complexes(self):
        for K in enumerate_complexes(EnumSpace(n=2, max_facets=3, max_vertices=7)):
            assert build_complex(K.facets) == K
            assert canonical_form(K) == K.facets


class TestConjectures:
    @pytest.mark.parametrize("which", [Conjecture.NO_CIRCUITS_SOME_K, Conjecture.NO_CIRCUITS_EACH_K])
    def test_linked_triangles_disprove_circuit_conjectures(self, vertex_linked_triangles, which):
        verdict = test_conjecture(vertex_linked_triangles, which)
        assert verdict.premises_hold
        assert not verdict.is_tree
        assert verdict.status is Status.COUNTEREXAMPLE
        assert verdict.canonical == LINKED_TRIANGLES_FORM

    def test_tree_is_consistent(self, strip_tree):
        verdict = test_conjecture(strip_tree, Conjecture.ACYCLIC_TOP_COUNT)
        assert verdict.premises_hold and verdict.is_tree
        assert verdict.status is Status.CONSISTENT
        assert verdict.converse_holds

    def test_extra_edge_fails_premises(self, linked_strips):
        verdict = test_conjecture(linked_strips, Conjecture.ACYCLIC_TOP_COUNT)
        assert not verdict.premises_hold
        assert verdict.status is Status.CONSISTENT

    def test_cyclic_complex(self, ring_with_pendants):
        assert not premises_hold(ring_with_pendants, Conjecture.ACYCLIC_TOP_COUNT)

    def test_serializes(self, vertex_linked_triangles):
        doc = test_conjecture(vertex_linked_triangles, Conjecture.NO_CIRCUITS_SOME_K).to_dict()
        assert doc["conjecture"] == "c1"
        assert doc["status"] == "counterexample"
        assert doc["canonical"] == [list(f) for f in LINKED_TRIANGLES_FORM]
        json.dumps(doc)


class TestSearch:
    @pytest.mark.parametrize("which", [Conjecture.NO_CIRCUITS_SOME_K, Conjecture.NO_CIRCUITS_EACH_K])
    def test_finds_linked_triangles(self, which):
        space = EnumSpace(n=2, max_facets=3, max_vertices=9)
        sink = CollectingSink()
        found = search_counterexamples(space, which, sink=sink)
        assert LINKED_TRIANGLES_FORM in [v.canonical for v in found]
        assert sink.verdicts == found
        for verdict in found:
            assert verdict.premises_hold and not verdict.is_tree

    def test_two_facets_have_no_counterexample(self):
        space = EnumSpace(n=2, max_facets=2, max_vertices=6)
        assert search_counterexamples(space, Conjecture.NO_CIRCUITS_SOME_K) == []

    def test_sorted_by_canonical_form(self):
        space = EnumSpace(n=2, max_facets=3, max_vertices=9)
        found = search_counterexamples(space, Conjecture.NO_CIRCUITS_SOME_K)
        forms = [v.canonical for v in found]
        assert forms == sorted(forms)

    def test_workers_agree_with_inline(self):
        space = EnumSpace(n=2, max_facets=3, max_vertices=9)
        inline = search_counterexamples(space, Conjecture.NO_CIRCUITS_SOME_K)
        pooled = search_counterexamples(space, Conjecture.NO_CIRCUITS_SOME_K, workers=2)
        assert [v.canonical for v in pooled] == [v.canonical for v in inline]

    def test_work_is_split_evenly(self):
        space = EnumSpace(n=2, max_facets=3, max_vertices=7)
        facet_lists = [K.facets for K in enumerate_complexes(space)]
        chunks = split_work(facet_lists, workers=2)
        assert 1 < len(chunks) <= 2 * CHUNKS_PER_WORKER
        assert [fs for chunk in chunks for fs in chunk] == facet_lists
        sizes = {len(chunk) for chunk in chunks[:-1]}
        assert len(sizes) == 1 and len(chunks[-1]) <= sizes.pop()

    def test_split_work_edge_cases(self):
        assert split_work([], workers=3) == []
        assert split_work([((1, 2),)], workers=0) == [[((1, 2),)]]

    def test_near_misses(self, tmp_path):
        space = EnumSpace(n=2, max_facets=3, max_vertices=7)
        near_miss = tmp_path / "near" / "new.jsonl"
        found = search_counterexamples(
            space,
            Conjecture.ACYCLIC_TOP_COUNT,
            near_miss_sink=JsonLinesSink(near_miss),
        )
        lines = [json.loads(line) for line in near_miss.read_text().splitlines()]
        assert lines
        assert all(doc["premises_hold"] for doc in lines)
        assert sum(not doc["is_tree"] for doc in lines) == len(found)

    def test_jsonl_sink_appends(self, tmp_path, vertex_linked_triangles):
        path = tmp_path / "c1.jsonl"
        sink = JsonLinesSink(path)
        verdict = test_conjecture(vertex_linked_triangles, Conjecture.NO_CIRCUITS_SOME_K)
        sink.add_verdicts([verdict])
        sink.add_verdicts([verdict])
        assert len(path.read_text().splitlines()) == 2
