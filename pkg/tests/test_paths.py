import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from complexes.core import build_complex
from complexes.errors import (
    DimensionMismatch,
    EndpointMismatch,
    ForeignSimplex,
    InvalidSequence,
    NotAWalk,
    NotConnectedPair,
    SameEndpoints,
)
from complexes.paths import (
    AltSequence,
    PathRelation,
    choose_distinct,
    compare_paths,
    components,
    find_ordering,
    find_path,
    find_reduced_path,
    is_connected,
    iter_reduced_paths,
    reduce_walk,
    validate_path,
    validate_reduced_path,
    validate_walk,
)
from tests.strategies import pure_complexes


def seq(*items):
    return AltSequence.of(items)


class TestAltSequence:
    def test_shape(self):
        s = seq([1], [1, 2, 3], [2], [2, 3, 4], [4])
        assert (s.m, s.n, s.length) == (0, 2, 2)
        assert s.sigmas == ((1,), (2,), (4,))
        assert s.etas == ((1, 2, 3), (2, 3, 4))

    @pytest.mark.parametrize(
        "items",
        [
            [[1], [1, 2, 3]],
            [[1]],
            [[1], [1, 2], [2, 3]],
            [[1, 2], [1, 2], [2, 3]],
            [[1], [1, 2, 3], [2], [2, 3], [3]],
        ],
    )
    def test_rejects_bad_shape(self, items):
        with pytest.raises(InvalidSequence):
            AltSequence.of(items)

    def test_serializes(self):
        assert seq([1], [1, 2, 3], [2]).to_dict() == {"m": 0, "items": [[1], [1, 2, 3], [2]]}


class TestChooseDistinct:
    def test_least_assignment(self):
        assert choose_distinct([[(2,), (1,)], [(1,), (3,)]]) == [(1,), (3,)]

    def test_backtracks(self):
        assert choose_distinct([[(1,), (2,)], [(1,)]]) == [(2,), (1,)]

    def test_forbidden(self):
        assert choose_distinct([[(1,)]], forbidden=frozenset({(1,)})) is None

    def test_empty_option_list(self):
        assert choose_distinct([[(1,)], []]) is None


class TestWalks:
    def test_walk(self, three_components):
        assert validate_walk(seq([1], [1, 2, 3], [2], [2, 3, 4], [4]), three_components)

    def test_repeated_sigma(self, three_components):
        assert not validate_walk(seq([1], [1, 2, 3], [1]), three_components)

    def test_sigma_outside_facet(self, three_components):
        assert not validate_walk(seq([1], [4, 5, 6], [4]), three_components)

    def test_foreign_simplex(self, three_components):
        with pytest.raises(ForeignSimplex):
            validate_walk(seq([1], [1, 2, 9], [2]), three_components)

    def test_dimension_mismatch(self, three_components):
        with pytest.raises(DimensionMismatch):
            validate_walk(seq([1], [1, 2], [2]), three_components)

    def test_path(self, three_components):
        s = seq([8, 9], [7, 8, 9], [7, 8], [7, 8, 10], [8, 10])
        assert validate_path(s, three_components)

    def test_length_one_path(self, single_facet):
        assert validate_path(seq([1], [1, 2, 3], [2]), single_facet)

    def test_path_revisiting_facet(self, strip_tree):
        s = seq([1], [1, 2, 3], [2], [2, 3, 4], [3], [1, 2, 3], [1])
        assert validate_walk(s, strip_tree)
        assert not validate_path(s, strip_tree)


class TestReducedPaths:
    def test_reduced_with_connector(self, three_components):
        witness = validate_reduced_path(seq([1], [1, 2, 3], [2], [2, 3, 4], [4]), three_components)
        assert witness is not None
        assert witness.connectors == ((2, 3),)

    def test_facets_meeting_in_a_vertex(self, three_components):
        s = seq([2], [2, 3, 4], [4], [4, 5, 6], [6])
        assert validate_reduced_path(s, three_components) is None

    def test_start_in_later_facet(self, three_components):
        s = seq([3], [1, 2, 3], [2], [2, 3, 4], [4])
        assert validate_reduced_path(s, three_components) is None

    def test_witness_serializes_connectors(self, three_components):
        witness = validate_reduced_path(seq([1], [1, 2, 3], [2], [2, 3, 4], [4]), three_components)
        assert witness.to_dict()["connectors"] == [[2, 3]]


class TestReduceWalk:
    def test_already_reduced(self, strip_tree):
        s = seq([1, 2], [1, 2, 3], [2, 3], [2, 3, 4], [2, 4])
        assert reduce_walk(s, strip_tree) == s

    def test_repeated_facet(self, three_components):
        s = seq([2, 3], [1, 2, 3], [1, 2], [1, 2, 3], [1, 3])
        assert reduce_walk(s, three_components).items == ((2, 3), (1, 2, 3), (1, 3))

    def test_start_in_later_facet(self):
        K = build_complex([[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 2, 5]])
        s = seq([1, 3], [1, 2, 3], [1, 2], [1, 2, 5], [1, 5], [1, 4, 5], [1, 4], [1, 3, 4], [3, 4])
        reduced = reduce_walk(s, K)
        assert reduced.items == ((1, 3), (1, 3, 4), (3, 4))
        assert validate_reduced_path(reduced, K) is not None

    def test_repeated_sigma(self, strip_tree):
        s = seq(
            [1, 2], [1, 2, 3], [2, 3], [2, 3, 4], [3, 4], [2, 3, 4], [2, 3], [2, 3, 4], [2, 4]
        )
        reduced = reduce_walk(s, strip_tree)
        assert reduced.items == ((1, 2), (1, 2, 3), (2, 3), (2, 3, 4), (2, 4))

    def test_needs_top_dimension(self, strip_tree):
        with pytest.raises(DimensionMismatch):
            reduce_walk(seq([1], [1, 2, 3], [2]), strip_tree)

    def test_not_a_walk(self, strip_tree):
        with pytest.raises(NotAWalk):
            reduce_walk(seq([1, 2], [2, 3, 4], [2, 3]), strip_tree)

    def test_closed_walk(self, strip_tree):
        with pytest.raises(SameEndpoints):
            reduce_walk(seq([1, 2], [1, 2, 3], [1, 3], [1, 2, 3], [1, 2]), strip_tree)


class TestFindPath:
    def test_through_two_facets(self, three_components):
        path = find_path(three_components, (1,), (4,))
        assert path.items == ((1,), (1, 2, 3), (2,), (2, 3, 4), (4,))
        assert validate_path(path, three_components)

    def test_other_component(self, three_components):
        assert find_path(three_components, (1,), (7,)) is None

    def test_one_facet(self, three_components):
        assert find_path(three_components, (1,), (3,)).items == ((1,), (1, 2, 3), (3,))

    def test_same_endpoints(self, three_components):
        with pytest.raises(SameEndpoints):
            find_path(three_components, (1,), (1,))

    def test_mixed_endpoints(self, three_components):
        with pytest.raises(DimensionMismatch):
            find_path(three_components, (1,), (1, 2))

    def test_foreign_endpoint(self, three_components):
        with pytest.raises(ForeignSimplex):
            find_path(three_components, (1,), (11,))


class TestFindReducedPath:
    def test_shared_facet(self, three_components):
        path = find_reduced_path(three_components, (8, 9), (7, 8))
        assert path.items == ((8, 9), (7, 8, 9), (7, 8))

    def test_spans_strip(self, strip_tree):
        path = find_reduced_path(strip_tree, (1,), (6,))
        assert path.items == (
            (1,), (1, 2, 3), (2,), (2, 3, 4), (3,), (3, 4, 5), (4,), (4, 5, 6), (6,)
        )
        assert validate_reduced_path(path, strip_tree) is not None

    def test_disconnected_pair(self, three_components):
        with pytest.raises(NotConnectedPair):
            find_reduced_path(three_components, (1,), (7,))

    @pytest.mark.parametrize("name", ["strip_tree", "fan_tree", "ring_with_pendants"])
    def test_every_vertex_pair(self, name, request):
        K = request.getfixturevalue(name)
        for a in K.simplices(0):
            for b in K.simplices(0):
                if a < b:
                    path = find_reduced_path(K, a, b)
                    assert path is not None
                    assert validate_reduced_path(path, K) is not None

    def test_enumeration_yields_reduced_paths(self, ring_with_pendants):
        found = list(iter_reduced_paths(ring_with_pendants, (6,), (8,)))
        assert len(found) == 1
        assert validate_reduced_path(found[0], ring_with_pendants) is not None


class TestComponents:
    def test_three_components(self, three_components):
        assert components(three_components) == [
            ((1, 2, 3), (2, 3, 4)),
            ((4, 5, 6),),
            ((7, 8, 9), (7, 8, 10), (8, 9, 10)),
        ]
        assert not is_connected(three_components)

    def test_connected(self, strip_tree, single_facet):
        assert is_connected(strip_tree)
        assert is_connected(single_facet)
        assert components(strip_tree) == [strip_tree.facets]

    def test_vertex_linked_triangles(self, vertex_linked_triangles):
        assert components(vertex_linked_triangles) == [
            ((1, 2, 3),),
            ((1, 5, 6),),
            ((3, 4, 5),),
        ]


class TestOrdering:
    def test_fan_tree(self, fan_tree):
        ordering = find_ordering(fan_tree)
        assert ordering.facets == ((1, 2, 3), (2, 3, 4), (2, 4, 5))
        assert ordering.complete

    def test_disconnected(self, three_components):
        assert find_ordering(three_components) is None

    def test_single_facet(self, single_facet):
        ordering = find_ordering(single_facet)
        assert ordering.facets == ((1, 2, 3),)
        assert ordering.complete

    def test_cyclic_complex_is_incomplete(self, ring_with_pendants):
        ordering = find_ordering(ring_with_pendants)
        assert sorted(ordering.facets) == list(ring_with_pendants.facets)
        assert not ordering.complete


class TestComparePaths:
    def test_independent(self, three_components):
        x = seq([8, 9], [8, 9, 10], [8, 10], [7, 8, 10], [7, 8])
        y = seq([8, 9], [7, 8, 9], [7, 8])
        assert compare_paths(x, y, three_components) is PathRelation.INDEPENDENT

    def test_same_facets(self, three_components):
        x = seq([9], [8, 9, 10], [8], [7, 8, 10], [7])
        y = seq([9], [8, 9, 10], [10], [7, 8, 10], [7])
        assert compare_paths(x, y, three_components) is PathRelation.EQUAL

    def test_contained(self, strip_tree):
        x = seq([2], [2, 3, 4], [4])
        y = seq([2], [1, 2, 3], [3], [2, 3, 4], [4])
        assert compare_paths(x, y, strip_tree) is PathRelation.X_DEPENDS_ON_Y
        assert compare_paths(y, x, strip_tree) is PathRelation.Y_DEPENDS_ON_X

    def test_identical(self, three_components):
        x = seq([8, 9], [7, 8, 9], [7, 8])
        assert compare_paths(x, x, three_components) is PathRelation.EQUAL

    def test_endpoint_mismatch(self, three_components):
        x = seq([8, 9], [7, 8, 9], [7, 8])
        y = seq([8, 9], [7, 8, 9], [7, 9])
        with pytest.raises(EndpointMismatch):
            compare_paths(x, y, three_components)


class TestPathProperties:
    @given(pure_complexes(), st.data())
    def test_found_walks_reduce(self, K, data):
        ridges = K.simplices(K.n - 1)
        a = data.draw(st.sampled_from(ridges))
        b = data.draw(st.sampled_from(ridges))
        assume(a != b)
        walk = find_path(K, a, b)
        assume(walk is not None)
        assert validate_path(walk, K)
        reduced = reduce_walk(walk, K)
        assert (reduced.start, reduced.end) == (a, b)
        assert set(reduced.etas) <= set(walk.etas)
        assert validate_reduced_path(reduced, K) is not None

    @given(pure_complexes(), st.data())
    def test_reduced_paths_validate(self, K, data):
        vertices = K.simplices(0)
        a = data.draw(st.sampled_from(vertices))
        b = data.draw(st.sampled_from(vertices))
        assume(a != b)
        try:
            path = find_reduced_path(K, a, b)
        except NotConnectedPair:
            return
        if path is not None:
            assert validate_reduced_path(path, K) is not None
