"""(m,n)-walks, paths and reduced path sequences; connectivity, components and orderings."""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from complexes.core import (
    PureComplex,
    Simplex,
    attachment_among,
    dimension,
    faces_of,
    is_face,
    is_simplex_closure,
)
from complexes.errors import (
    DimensionMismatch,
    DimensionOutOfRange,
    EndpointMismatch,
    ForeignSimplex,
    InvalidSequence,
    NotAWalk,
    NotConnectedPair,
    SameEndpoints,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AltSequence:
    """
    An alternating sequence σ_1, η_1, σ_2, ..., η_r, σ_{r+1}.

    The σ items are m-simplices and the η items are n-simplices with m < n.
    Construction only checks the alternating shape; membership in a complex
    is checked by the validators, which take the complex explicitly.

    Attributes:
        m (int): Dimension of the σ items.
        items (Tuple[Simplex, ...]): The alternating items, odd count >= 3.

    Raises:
        InvalidSequence: If the shape or the alternation of dimensions is wrong.

    Example:
        >>> seq = AltSequence.of([(1,), (1, 2, 3), (2,)])
        >>> seq.m, seq.n, seq.length
        (0, 2, 1)
    """

    m: int
    items: Tuple[Simplex, ...]

    def __post_init__(self):
        if len(self.items) < 3 or len(self.items) % 2 == 0:
            raise InvalidSequence(
                f"An alternating sequence needs an odd item count >= 3, got {len(self.items)}."
            )
        if any(dimension(s) != self.m for s in self.sigmas):
            raise InvalidSequence(f"Every even-position item must be a {self.m}-simplex.")
        n = dimension(self.items[1])
        if n <= self.m:
            raise InvalidSequence(f"Facet items need dimension above {self.m}, got {n}.")
        if any(dimension(e) != n for e in self.etas):
            raise InvalidSequence(f"Every odd-position item must be a {n}-simplex.")

    @classmethod
    def of(cls, items: Sequence[Sequence[int]]) -> "AltSequence":
        """Build a sequence from vertex lists, inferring m from the first item."""
        canonical = tuple(tuple(sorted(s)) for s in items)
        if not canonical or not canonical[0]:
            raise InvalidSequence("An alternating sequence cannot be empty.")
        return cls(m=dimension(canonical[0]), items=canonical)

    @property
    def n(self) -> int:
        return dimension(self.items[1])

    @property
    def sigmas(self) -> Tuple[Simplex, ...]:
        return self.items[0::2]

    @property
    def etas(self) -> Tuple[Simplex, ...]:
        return self.items[1::2]

    @property
    def length(self) -> int:
        """The length r: the number of facet items."""
        return len(self.items) // 2

    @property
    def start(self) -> Simplex:
        return self.items[0]

    @property
    def end(self) -> Simplex:
        return self.items[-1]

    def to_dict(self) -> Dict:
        return {"m": self.m, "items": [list(s) for s in self.items]}


@dataclass(frozen=True)
class ReducedWitness:
    """A reduced path sequence together with its distinct connecting (n-1)-simplices."""

    base: AltSequence
    connectors: Tuple[Simplex, ...]

    def to_dict(self) -> Dict:
        doc = self.base.to_dict()
        doc["connectors"] = [list(c) for c in self.connectors]
        return doc


@dataclass(frozen=True)
class Ordering:
    """
    An (n-1)-ordering of all facets of a complex.

    Attributes:
        facets (Tuple[Simplex, ...]): Permutation of the facets.
        complete (bool): True when every attachment along the order is a
            complete complex on n vertices.
    """

    facets: Tuple[Simplex, ...]
    complete: bool

    def to_dict(self) -> Dict:
        return {"facets": [list(f) for f in self.facets], "complete": self.complete}


class PathRelation(str, Enum):
    """Dependence between two reduced path sequences with the same endpoints."""

    X_DEPENDS_ON_Y = "x_dep_y"
    Y_DEPENDS_ON_X = "y_dep_x"
    EQUAL = "equal"
    INDEPENDENT = "independent"


def choose_distinct(
    options: Sequence[Sequence[Simplex]],
    forbidden: FrozenSet[Simplex] = frozenset(),
) -> Optional[List[Simplex]]:
    """
    Pick one item per option list so that all picks are distinct.

    Backtracking over the option lists in order, each list tried in
    lexicographic order, so the first assignment found is the
    lexicographically least one.

    Args:
        options (Sequence[Sequence[Simplex]]): Candidate simplices per position.
        forbidden (FrozenSet[Simplex]): Simplices no position may take.

    Returns:
        Optional[List[Simplex]]: The chosen simplices, or None if no system of
            distinct representatives exists.

    Example:
        >>> choose_distinct([[(1,), (2,)], [(1,)]])
        [(2,), (1,)]
    """
    sorted_options = [sorted(o) for o in options]
    chosen: List[Simplex] = []
    used = set(forbidden)

    def extend(i: int) -> bool:
        if i == len(sorted_options):
            return True
        for candidate in sorted_options[i]:
            if candidate in used:
                continue
            used.add(candidate)
            chosen.append(candidate)
            if extend(i + 1):
                return True
            chosen.pop()
            used.discard(candidate)
        return False

    return chosen if extend(0) else None


def shared_ridge(f: Simplex, g: Simplex) -> Optional[Simplex]:
    """The common (n-1)-face of two distinct n-simplices, if they share one."""
    if f == g:
        return None
    common = tuple(v for v in f if v in g)
    return common if len(common) == len(f) - 1 else None


def references_complex(seq: AltSequence, K: PureComplex) -> bool:
    return seq.n == K.n and all(K.contains(s) for s in seq.items)


def require_references(seq: AltSequence, K: PureComplex) -> None:
    if seq.n != K.n:
        raise DimensionMismatch(
            f"Sequence facets have dimension {seq.n}, the complex has dimension {K.n}."
        )
    for s in seq.items:
        if not K.contains(s):
            raise ForeignSimplex(f"{list(s)} is not a simplex of the complex.")


def is_walk(seq: AltSequence) -> bool:
    sigmas, etas = seq.sigmas, seq.etas
    for k, eta in enumerate(etas):
        if sigmas[k] == sigmas[k + 1]:
            return False
        if not (is_face(sigmas[k], eta) and is_face(sigmas[k + 1], eta)):
            return False
    return True


def validate_walk(seq: AltSequence, K: PureComplex) -> bool:
    """
    True iff `seq` is an (m,n)-walk sequence of K.

    Consecutive σ items must differ and both be faces of the facet between them.

    Raises:
        ForeignSimplex: If an item is not a simplex of K.
        DimensionMismatch: If the facet items do not have the dimension of K.

    Example:
        >>> K = build_complex([[1, 2, 3], [2, 3, 4]])
        >>> validate_walk(AltSequence.of([[1], [1, 2, 3], [2], [2, 3, 4], [4]]), K)
        True
    """
    require_references(seq, K)
    return is_walk(seq)


def validate_path(seq: AltSequence, K: PureComplex) -> bool:
    """True iff `seq` is a walk whose items are pairwise distinct."""
    return validate_walk(seq, K) and len(set(seq.items)) == len(seq.items)


def connector_options(seq: AltSequence) -> List[List[Simplex]]:
    sigmas, etas = seq.sigmas, seq.etas
    options = []
    for z in range(1, seq.length):
        ridge = shared_ridge(etas[z - 1], etas[z])
        options.append([ridge] if ridge is not None and is_face(sigmas[z], ridge) else [])
    return options


def validate_reduced_path(seq: AltSequence, K: PureComplex) -> Optional[ReducedWitness]:
    """
    Certify that `seq` is a reduced (m,n)-path sequence of K.

    A reduced path is a path whose first σ is a face of η_1 only and whose
    last σ is a face of η_r only, among the facets of the sequence, and whose
    interior σ items lie in pairwise distinct connecting (n-1)-simplices,
    each a common face of the facets around it.

    Args:
        seq (AltSequence): The candidate sequence.
        K (PureComplex): The complex the sequence refers to.

    Returns:
        Optional[ReducedWitness]: The witness with its connectors, or None if
            `seq` is not a reduced path sequence of K.

    Example:
        >>> K = build_complex([[1, 2, 3], [2, 3, 4]])
        >>> validate_reduced_path(AltSequence.of([[1], [1, 2, 3], [2], [2, 3, 4], [4]]), K).connectors
        ((2, 3),)
    """
    if not references_complex(seq, K):
        return None
    if not is_walk(seq) or len(set(seq.items)) != len(seq.items):
        return None

    etas = seq.etas
    if any(is_face(seq.start, eta) for eta in etas[1:]):
        return None
    if any(is_face(seq.end, eta) for eta in etas[:-1]):
        return None

    connectors = choose_distinct(connector_options(seq))
    if connectors is None:
        return None
    return ReducedWitness(base=seq, connectors=tuple(connectors))


def reduce_walk(seq: AltSequence, K: PureComplex) -> AltSequence:
    """
    Shorten an (n-1,n)-walk into a reduced (n-1,n)-path with the same endpoints.

    Shortcuts are removed until none applies, in this order: a repeated σ
    (cut the loop between its occurrences), a repeated facet (jump from its
    first to its last occurrence), a start σ that is also a face of a later
    facet (start from the last such facet), an end σ that is also a face of
    an earlier facet (end at the first such facet). Each step shortens the
    sequence and keeps it a walk, and the facets of the result are a subset
    of the facets of the input.

    Args:
        seq (AltSequence): An (n-1,n)-walk sequence of K.
        K (PureComplex): The complex.

    Returns:
        AltSequence: A reduced (n-1,n)-path sequence.

    Raises:
        DimensionMismatch: If `seq` is not an (n-1,n)-sequence.
        NotAWalk: If `seq` is not a walk of K.
        SameEndpoints: If the walk is closed.

    Example:
        >>> K = build_complex([[1, 2, 3]])
        >>> reduce_walk(AltSequence.of([[2, 3], [1, 2, 3], [1, 2], [1, 2, 3], [1, 3]]), K).items
        ((2, 3), (1, 2, 3), (1, 3))
    """
    if seq.m != K.n - 1:
        raise DimensionMismatch(f"reduce_walk needs m = n - 1 = {K.n - 1}, got m = {seq.m}.")
    if not validate_walk(seq, K):
        raise NotAWalk("The sequence is not a walk of the complex.")
    if seq.start == seq.end:
        raise SameEndpoints("A closed walk has no reduced path between its endpoints.")

    sigmas = list(seq.sigmas)
    etas = list(seq.etas)
    while True:
        repeat = _first_repeat(sigmas)
        if repeat is not None:
            p, q = repeat
            sigmas, etas = sigmas[: p + 1] + sigmas[q + 1 :], etas[:p] + etas[q:]
            continue
        repeat = _first_repeat(etas)
        if repeat is not None:
            x, y = repeat
            sigmas, etas = sigmas[: x + 1] + sigmas[y + 1 :], etas[: x + 1] + etas[y + 1 :]
            continue
        later = [s for s in range(1, len(etas)) if is_face(sigmas[0], etas[s])]
        if later:
            s = later[-1]
            sigmas, etas = sigmas[:1] + sigmas[s + 1 :], etas[s:]
            continue
        earlier = [t for t in range(len(etas) - 1) if is_face(sigmas[-1], etas[t])]
        if earlier:
            t = earlier[0]
            sigmas, etas = sigmas[: t + 1] + sigmas[-1:], etas[: t + 1]
            continue
        break

    reduced = interleave(seq.m, sigmas, etas)
    logger.debug("Reduced walk of length %d to length %d", seq.length, reduced.length)
    return reduced


def _first_repeat(items: List[Simplex]) -> Optional[Tuple[int, int]]:
    """First index with a later repeat, paired with its last occurrence."""
    for i, item in enumerate(items):
        last = max(j for j, other in enumerate(items) if other == item)
        if last > i:
            return i, last
    return None


def interleave(m: int, sigmas: Sequence[Simplex], etas: Sequence[Simplex]) -> AltSequence:
    items: List[Simplex] = []
    for sigma, eta in zip(sigmas, etas):
        items.extend((sigma, eta))
    items.append(sigmas[-1])
    return AltSequence(m=m, items=tuple(items))


def _check_endpoints(K: PureComplex, a: Simplex, b: Simplex) -> int:
    if dimension(a) != dimension(b):
        raise DimensionMismatch(f"{list(a)} and {list(b)} have different dimensions.")
    m = dimension(a)
    if not 0 <= m <= K.n - 1:
        raise DimensionOutOfRange(f"Path endpoints need dimension 0..{K.n - 1}, got {m}.")
    for s in (a, b):
        if not K.contains(s):
            raise ForeignSimplex(f"{list(s)} is not a simplex of the complex.")
    if a == b:
        raise SameEndpoints("Path endpoints must be distinct.")
    return m


def find_path(K: PureComplex, a: Simplex, b: Simplex) -> Optional[AltSequence]:
    """
    Find an (m,n)-path sequence from `a` to `b` by breadth-first search.

    The search moves from an m-simplex to the other m-faces of the facets
    containing it, facets and faces visited in lexicographic order. A
    shortest walk never repeats an item, so the result is a path.

    Args:
        K (PureComplex): The complex.
        a (Simplex): Start m-simplex.
        b (Simplex): End m-simplex.

    Returns:
        Optional[AltSequence]: A shortest path sequence, or None if `b` is
            unreachable from `a`.

    Raises:
        DimensionMismatch: If `a` and `b` have different dimensions.
        SameEndpoints: If `a` equals `b`.
    """
    m = _check_endpoints(K, a, b)
    parents: Dict[Simplex, Tuple[Simplex, Simplex]] = {}
    seen = {a}
    queue = deque([a])
    while queue:
        sigma = queue.popleft()
        for eta in K.facets_containing(sigma):
            for tau in faces_of(eta, m):
                if tau in seen:
                    continue
                seen.add(tau)
                parents[tau] = (sigma, eta)
                if tau == b:
                    return _unwind(m, parents, a, b)
                queue.append(tau)
    return None


def _unwind(
    m: int, parents: Dict[Simplex, Tuple[Simplex, Simplex]], a: Simplex, b: Simplex
) -> AltSequence:
    items = [b]
    current = b
    while current != a:
        previous, eta = parents[current]
        items.extend((eta, previous))
        current = previous
    return AltSequence(m=m, items=tuple(reversed(items)))


def facet_graph(K: PureComplex) -> nx.Graph:
    """Facets as nodes, joined when they share an (n-1)-face."""
    G = nx.Graph()
    G.add_nodes_from(K.facets)
    for ridge in K.faces[K.n - 1]:
        G.add_edges_from(combinations(K.cofaces[ridge], 2))
    return G


@lru_cache(maxsize=256)
def facet_neighbours(K: PureComplex) -> Dict[Simplex, List[Simplex]]:
    """Facets sharing an (n-1)-face with each facet, in lexicographic order."""
    G = facet_graph(K)
    return {f: sorted(G.neighbors(f)) for f in K.facets}


def components(K: PureComplex) -> List[Tuple[Simplex, ...]]:
    """
    Partition the facets of K into connected components.

    Two facets are related when a chain of facets, consecutive ones sharing
    an (n-1)-face, joins them. Each class is sorted and classes are ordered
    by their least facet.

    Example:
        >>> components(build_complex([[1, 2, 3], [2, 3, 4], [4, 5, 6]]))
        [((1, 2, 3), (2, 3, 4)), ((4, 5, 6),)]
    """
    classes = [tuple(sorted(c)) for c in nx.connected_components(facet_graph(K))]
    return sorted(classes)


def is_connected(K: PureComplex) -> bool:
    """True iff every two (n-1)-simplices are joined by an (n-1,n)-path sequence."""
    return nx.is_connected(facet_graph(K))


def _component_index(K: PureComplex) -> Dict[Simplex, int]:
    return {f: i for i, cls in enumerate(components(K)) for f in cls}


def _lifts(K: PureComplex, s: Simplex) -> List[Simplex]:
    """The (n-1)-simplices of K containing `s`."""
    ridges = {r for eta in K.facets_containing(s) for r in faces_of(eta, K.n - 1) if is_face(s, r)}
    return sorted(ridges)


def find_reduced_path(K: PureComplex, a: Simplex, b: Simplex) -> Optional[AltSequence]:
    """
    Build a reduced (m,n)-path sequence from `a` to `b`.

    Both endpoints are lifted to (n-1)-simplices containing them; the
    (n-1,n)-path between the lifts is reduced, trimmed to the stretch from the
    last facet containing `a` to the next facet containing `b`, and its
    connectors are projected to distinct m-faces. Lift pairs are tried in
    lexicographic order; if no projection works the reduced paths are
    enumerated exhaustively.

    Args:
        K (PureComplex): The complex.
        a (Simplex): Start m-simplex, 0 <= m <= n - 1.
        b (Simplex): End m-simplex.

    Returns:
        Optional[AltSequence]: A reduced path sequence, or None if the
            endpoints are connected but no reduced path exists.

    Raises:
        DimensionMismatch: If `a` and `b` have different dimensions.
        NotConnectedPair: If no lift of `a` is connected to a lift of `b`.
    """
    m = _check_endpoints(K, a, b)

    shared = [eta for eta in K.facets_containing(a) if is_face(b, eta)]
    if shared:
        return AltSequence(m=m, items=(a, shared[0], b))

    index = _component_index(K)
    if not {index[f] for f in K.facets_containing(a)} & {index[f] for f in K.facets_containing(b)}:
        raise NotConnectedPair(f"No (n-1,n)-path joins lifts of {list(a)} and {list(b)}.")

    for lift_a in _lifts(K, a):
        for lift_b in _lifts(K, b):
            if lift_a == lift_b:
                continue
            walk = find_path(K, lift_a, lift_b)
            if walk is None:
                continue
            candidate = _project(m, reduce_walk(walk, K), a, b)
            if candidate is not None and validate_reduced_path(candidate, K) is not None:
                return candidate

    logger.debug("Projection failed for %s -> %s, enumerating reduced paths", a, b)
    return next(iter_reduced_paths(K, a, b), None)


def _project(m: int, top: AltSequence, a: Simplex, b: Simplex) -> Optional[AltSequence]:
    sigmas, etas = top.sigmas, top.etas
    p = max(i for i, eta in enumerate(etas) if is_face(a, eta))
    x = min(i for i in range(p, len(etas)) if is_face(b, etas[i]))
    if p == x:
        return AltSequence(m=m, items=(a, etas[p], b))
    options = [faces_of(sigmas[z], m) for z in range(p + 1, x + 1)]
    chosen = choose_distinct(options, forbidden=frozenset((a, b)))
    if chosen is None:
        return None
    return interleave(m, [a, *chosen, b], etas[p : x + 1])


def iter_reduced_paths(K: PureComplex, a: Simplex, b: Simplex) -> Iterator[AltSequence]:
    """
    Enumerate reduced (m,n)-path sequences from `a` to `b`, one per facet chain.

    Chains start at a facet containing `a`, step through facets sharing a not
    yet used (n-1)-face with the previous one, never re-enter a facet
    containing `a`, and stop at the first facet containing `b`. Each chain
    whose connectors admit distinct m-faces yields the lexicographically
    least such sequence. Chains are explored depth-first in lexicographic
    order.

    Yields:
        AltSequence: Reduced path sequences, each passing `validate_reduced_path`.
    """
    m = _check_endpoints(K, a, b)
    neighbours = facet_neighbours(K)

    def walk(chain: List[Simplex], ridges: List[Simplex]) -> Iterator[AltSequence]:
        last = chain[-1]
        if is_face(b, last):
            chosen = choose_distinct(
                [faces_of(r, m) for r in ridges], forbidden=frozenset((a, b))
            )
            if chosen is not None:
                yield interleave(m, [a, *chosen, b], chain)
            return
        for nxt in neighbours[last]:
            ridge = shared_ridge(last, nxt)
            if nxt in chain or ridge in ridges or is_face(a, nxt):
                continue
            chain.append(nxt)
            ridges.append(ridge)
            yield from walk(chain, ridges)
            chain.pop()
            ridges.pop()

    for start in K.facets_containing(a):
        yield from walk([start], [])


def find_ordering(K: PureComplex) -> Optional[Ordering]:
    """
    Greedily build an (n-1)-ordering of the facets of K.

    Starting at the least facet, the least unused facet sharing an
    (n-1)-face with an already placed facet is appended each step. The
    greedy construction succeeds exactly when K is connected. The ordering
    is marked complete when every attachment along it is a complete complex
    on n vertices.

    Returns:
        Optional[Ordering]: The ordering, or None when K is disconnected.

    Example:
        >>> find_ordering(build_complex([[1, 2, 3], [2, 3, 4], [2, 4, 5]]))
        Ordering(facets=((1, 2, 3), (2, 3, 4), (2, 4, 5)), complete=True)
    """
    placed = [K.facets[0]]
    remaining = list(K.facets[1:])
    while remaining:
        nxt = next(
            (f for f in remaining if any(shared_ridge(f, g) for g in placed)),
            None,
        )
        if nxt is None:
            logger.debug("No (n-1)-ordering: %d facets unreachable", len(remaining))
            return None
        placed.append(nxt)
        remaining.remove(nxt)
    return Ordering(facets=tuple(placed), complete=is_complete_ordering(placed, K.n))


def is_complete_ordering(facets: Sequence[Simplex], n: int) -> bool:
    """True when each facet after the first attaches to its prefix in a complete complex on n vertices."""
    return all(
        is_simplex_closure(attachment_among(facets[i], facets[:i]), n)
        for i in range(1, len(facets))
    )


def compare_paths(x: AltSequence, y: AltSequence, K: PureComplex) -> PathRelation:
    """
    Classify two reduced path sequences by containment of their facet closures.

    Facets of one dimension are faces of one another only when equal, so the
    closure of the facets of `x` lies in that of `y` exactly when the facet
    set of `x` is contained in that of `y`.

    Raises:
        EndpointMismatch: If the sequences do not share both endpoints.
        ForeignSimplex: If either sequence refers outside K.
    """
    if x.start != y.start or x.end != y.end:
        raise EndpointMismatch("Dependence compares sequences with the same endpoints only.")
    require_references(x, K)
    require_references(y, K)
    fx, fy = set(x.etas), set(y.etas)
    if fx == fy:
        return PathRelation.EQUAL
    if fx < fy:
        return PathRelation.X_DEPENDS_ON_Y
    if fy < fx:
        return PathRelation.Y_DEPENDS_ON_X
    return PathRelation.INDEPENDENT
