"""Immutable pure n-simplicial complexes and the counting constructions on them."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

import networkx as nx

from complexes.errors import (
    DimensionOutOfRange,
    EmptyInput,
    InvalidSimplex,
    MixedDimension,
    NotAFacet,
)

logger = logging.getLogger(__name__)

Vertex = int
Simplex = Tuple[Vertex, ...]
Graph = nx.Graph


def simplex(vertices: Iterable[int]) -> Simplex:
    """
    Canonicalize a vertex collection into a simplex.

    A simplex is the strictly increasing tuple of its vertex ids, so equal
    vertex sets always compare and hash equal.

    Args:
        vertices (Iterable[int]): Non-negative integer vertex ids, any order.

    Returns:
        Simplex: The sorted vertex tuple.

    Raises:
        InvalidSimplex: If the collection is empty, repeats a vertex, or holds
            something other than a non-negative integer.

    Example:
        >>> simplex([9, 5, 7])
        (5, 7, 9)
    """
    raw = list(vertices)
    if not raw:
        raise InvalidSimplex("A simplex needs at least one vertex.")
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InvalidSimplex(f"Vertex ids must be non-negative integers, got {v!r}.")
    ordered = tuple(sorted(raw))
    if len(set(ordered)) != len(ordered):
        raise InvalidSimplex(f"Repeated vertex in {raw}.")
    return ordered


def dimension(s: Simplex) -> int:
    """Dimension of a simplex: its vertex count minus one."""
    return len(s) - 1


def is_face(tau: Simplex, sigma: Simplex) -> bool:
    """True when every vertex of `tau` is a vertex of `sigma`."""
    return set(tau).issubset(sigma)


def faces_of(s: Simplex, k: int) -> List[Simplex]:
    """All k-dimensional faces of `s` in lexicographic order."""
    return list(combinations(s, k + 1))


def _nonempty_subsets(s: Simplex) -> Iterator[Simplex]:
    for size in range(1, len(s) + 1):
        yield from combinations(s, size)


def closure(simplices: Iterable[Simplex]) -> FrozenSet[Simplex]:
    """
    Smallest simplex set containing `simplices` and closed under faces.

    Args:
        simplices (Iterable[Simplex]): Canonical simplices.

    Returns:
        FrozenSet[Simplex]: Every nonempty subset of every input simplex.
    """
    closed = set()
    for s in simplices:
        closed.update(_nonempty_subsets(s))
    return frozenset(closed)


@dataclass(frozen=True)
class PureComplex:
    """
    A pure n-simplicial complex given by its facets, with every face indexed.

    The face index is materialized eagerly when the complex is built: for each
    0 <= k <= n, `faces[k]` is the set K^k of k-simplices, and `cofaces` maps
    every simplex to the facets containing it. Instances are immutable and are
    compared and hashed by `(n, facets)` only, so they are safe to share across
    threads, cache keys and worker processes.

    Attributes:
        n (int): Dimension of the complex (every facet has n + 1 vertices).
        facets (Tuple[Simplex, ...]): Facets in lexicographic order.
        faces (Tuple[FrozenSet[Simplex], ...]): `faces[k]` is K^k.
        cofaces (Dict[Simplex, Tuple[Simplex, ...]]): Facets containing each simplex.

    Example:
        >>> K = build_complex([[1, 2, 3], [2, 3, 4]])
        >>> K.n, len(K.faces[1])
        (2, 5)
        >>> K.facets_containing((2, 3))
        ((1, 2, 3), (2, 3, 4))
    """

    n: int
    facets: Tuple[Simplex, ...]
    faces: Tuple[FrozenSet[Simplex], ...] = field(repr=False, compare=False)
    cofaces: Dict[Simplex, Tuple[Simplex, ...]] = field(repr=False, compare=False)

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        """All vertex ids in increasing order."""
        return tuple(sorted(v for (v,) in self.faces[0]))

    @property
    def facet_set(self) -> FrozenSet[Simplex]:
        return frozenset(self.facets)

    def contains(self, s: Simplex) -> bool:
        """True when `s` is a simplex of this complex."""
        return s in self.cofaces

    def facets_containing(self, s: Simplex) -> Tuple[Simplex, ...]:
        """Facets having `s` as a face, in lexicographic order."""
        return self.cofaces.get(s, ())

    def simplices(self, k: int) -> List[Simplex]:
        """The k-simplices in lexicographic order."""
        return sorted(self.faces[k])

    def to_dict(self) -> Dict:
        """Facet-list document form: `{"n": ..., "facets": [[...], ...]}`."""
        return {"n": self.n, "facets": [list(f) for f in self.facets]}


def build_complex(facets: Iterable[Iterable[int]]) -> PureComplex:
    """
    Build the pure complex generated by a facet set.

    Facets are canonicalized and deduplicated; the face index is exactly the
    closure of the facet set.

    Args:
        facets (Iterable[Iterable[int]]): Vertex collections, all of the same size.

    Returns:
        PureComplex: The closed, indexed complex.

    Raises:
        EmptyInput: If no facet is given.
        MixedDimension: If the facets do not all have the same dimension.
        DimensionOutOfRange: If the common dimension is 0.
        InvalidSimplex: If a facet is not a valid simplex.

    Example:
        >>> K = build_complex([[4, 5, 6], [1, 2, 3]])
        >>> K.facets
        ((1, 2, 3), (4, 5, 6))
    """
    canonical = sorted({simplex(f) for f in facets})
    if not canonical:
        raise EmptyInput("A pure complex needs at least one facet.")

    dims = sorted({dimension(f) for f in canonical})
    if len(dims) > 1:
        raise MixedDimension(f"Facets have mixed dimensions {dims}.")
    n = dims[0]
    if n < 1:
        raise DimensionOutOfRange(f"Pure complexes need dimension n >= 1, got {n}.")

    faces: List[set] = [set() for _ in range(n + 1)]
    cofaces: Dict[Simplex, List[Simplex]] = {}
    for f in canonical:
        for tau in _nonempty_subsets(f):
            faces[dimension(tau)].add(tau)
            cofaces.setdefault(tau, []).append(f)

    logger.debug(
        "Built %d-complex with %d facets and %d vertices",
        n,
        len(canonical),
        len(faces[0]),
    )
    return PureComplex(
        n=n,
        facets=tuple(canonical),
        faces=tuple(frozenset(level) for level in faces),
        cofaces={tau: tuple(fs) for tau, fs in cofaces.items()},
    )


def attachment_among(f: Simplex, others: Iterable[Simplex]) -> FrozenSet[Simplex]:
    """
    Faces of `f` shared with at least one facet of `others` other than `f`.

    This is the attachment of `f` in the closure of `others` plus `f`, the
    form the ordering searches need while a facet sequence is still growing.
    """
    shared = set()
    for g in others:
        if g == f:
            continue
        common = tuple(v for v in f if v in g)
        if common:
            shared.update(_nonempty_subsets(common))
    return frozenset(shared)


def attachment(f: Simplex, K: PureComplex) -> FrozenSet[Simplex]:
    """
    The attachment A(f, K): proper faces of facet `f` lying in another facet.

    Args:
        f (Simplex): A facet of `K`.
        K (PureComplex): The complex.

    Returns:
        FrozenSet[Simplex]: A subcomplex of the closure of `f`; may be empty.

    Raises:
        NotAFacet: If `f` is not a facet of `K`.

    Example:
        >>> K = build_complex([[1, 2, 3], [2, 3, 4], [4, 5, 6]])
        >>> sorted(attachment((4, 5, 6), K))
        [(4,)]
    """
    if f not in K.facet_set:
        raise NotAFacet(f"{list(f)} is not a facet of the complex.")
    return attachment_among(f, K.facets)


def is_simplex_closure(simplices: FrozenSet[Simplex], size: int) -> bool:
    """
    True when `simplices` is the complete complex on exactly `size` vertices.

    A complete complex on `size` vertices is the closure of one simplex with
    that many vertices; for a face-closed input it suffices that the vertex
    union has `size` elements and is itself present.
    """
    if not simplices:
        return False
    union = tuple(sorted({v for s in simplices for v in s}))
    return len(union) == size and union in simplices


def is_m_complete(K: PureComplex, m: int) -> bool:
    """
    True when K has dimension m and every (m+1)-subset of its vertices is a simplex.

    Example:
        >>> is_m_complete(build_complex([[1, 2], [1, 3], [2, 3]]), 1)
        True
    """
    if m < 0 or K.n != m:
        return False
    return len(K.faces[m]) == comb(len(K.faces[0]), m + 1)


def _check_dimension(K: PureComplex, k: int, low: int = 0) -> None:
    if not low <= k <= K.n:
        raise DimensionOutOfRange(
            f"Dimension {k} outside {low}..{K.n} for a {K.n}-complex."
        )


def alpha(K: PureComplex, k: int) -> int:
    """
    Number of k-simplices of K.

    Raises:
        DimensionOutOfRange: If k is not in 0..n.
    """
    _check_dimension(K, k)
    return len(K.faces[k])


def alphas(K: PureComplex) -> List[int]:
    """The face vector [alpha_0, ..., alpha_n]."""
    return [len(level) for level in K.faces]


def tree_count_formula(p: int, n: int, k: int) -> int:
    """
    Number of k-simplices of an n-dimensional simplicial tree on p vertices.

    Returns:
        int: (p - n) * C(n, k) + C(n, k + 1).

    Example:
        >>> tree_count_formula(6, 2, 1)
        9
    """
    return (p - n) * comb(n, k) + comb(n, k + 1)


def dewdney_count_formula(p: int, m: int, n: int, k: int) -> Fraction:
    """
    Dewdney's k-simplex count for an (m, n)-tree on p vertices, computed exactly.

    The value is ((p-m-1)/(n-m)) * C(n+1, k+1) - ((p-n-1)/(n-m)) * C(m+1, k+1).
    It is returned as a `Fraction` and may be non-integral when (p, m, n) cannot
    describe an (m, n)-tree; callers compare it to integer counts exactly.

    Raises:
        DimensionOutOfRange: If 0 <= m < n does not hold.

    Example:
        >>> dewdney_count_formula(10, 1, 2, 1)
        Fraction(17, 1)
    """
    if not 0 <= m < n:
        raise DimensionOutOfRange(f"Need 0 <= m < n, got m={m}, n={n}.")
    width = n - m
    return Fraction(p - m - 1, width) * comb(n + 1, k + 1) - Fraction(
        p - n - 1, width
    ) * comb(m + 1, k + 1)


def k_skeleton(K: PureComplex, k: int) -> FrozenSet[Simplex]:
    """
    All simplices of K of dimension at most k.

    Raises:
        DimensionOutOfRange: If k is not in 0..n.
    """
    _check_dimension(K, k)
    return frozenset().union(*K.faces[: k + 1])


def all_simplices(K: PureComplex) -> FrozenSet[Simplex]:
    return k_skeleton(K, K.n)


def one_skeleton_graph(K: PureComplex) -> Graph:
    """The 1-skeleton of K as a simple undirected `networkx.Graph`."""
    G = nx.Graph()
    G.add_nodes_from(K.vertices)
    if K.n >= 1:
        G.add_edges_from(sorted(K.faces[1]))
    return G


def clique_complex(G: Graph) -> FrozenSet[Simplex]:
    """
    The clique complex of a simple graph: every clique becomes a simplex.

    Maximal cliques come from `networkx.find_cliques`; every nonempty subset of
    a clique is again a clique, so the result is their closure. Isolated
    vertices become 0-simplices and self-loops are ignored.

    Args:
        G (Graph): A simple undirected graph on non-negative integer vertices.

    Returns:
        FrozenSet[Simplex]: The simplices of Cl(G).

    Example:
        >>> G = nx.path_graph([1, 2, 3])
        >>> sorted(clique_complex(G))
        [(1,), (1, 2), (2,), (2, 3), (3,)]
    """
    H = nx.Graph(G)
    H.remove_edges_from(list(nx.selfloop_edges(H)))
    return closure(simplex(clique) for clique in nx.find_cliques(H))


def joint_simplices(K: PureComplex, m: int) -> FrozenSet[Simplex]:
    """
    The joint m-simplices of K: m-simplices lying in at least two facets.

    Raises:
        DimensionOutOfRange: If m is not in 0..n-1.
    """
    if not 0 <= m <= K.n - 1:
        raise DimensionOutOfRange(f"Joint simplices need 0 <= m <= {K.n - 1}, got {m}.")
    return frozenset(s for s in K.faces[m] if len(K.cofaces[s]) >= 2)
