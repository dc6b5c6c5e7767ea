"""(m,n)-circuits and (m,n)-simplicial cycle sequences; acyclicity."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from complexes.core import PureComplex, Simplex, faces_of, is_face, joint_simplices
from complexes.errors import DimensionOutOfRange, NotConnected
from complexes.paths import (
    AltSequence,
    choose_distinct,
    connector_options,
    facet_neighbours,
    interleave,
    is_connected,
    is_walk,
    reduce_walk,
    references_complex,
    require_references,
    shared_ridge,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleWitness:
    """A simplicial cycle sequence with its distinct connecting (n-1)-simplices."""

    seq: AltSequence
    connectors: Tuple[Simplex, ...]

    def to_dict(self) -> Dict:
        doc = self.seq.to_dict()
        doc["connectors"] = [list(c) for c in self.connectors]
        return doc


def _is_circuit(seq: AltSequence) -> bool:
    if not is_walk(seq) or seq.start != seq.end:
        return False
    interior = seq.sigmas[:-1]
    return len(set(interior)) == len(interior) and len(set(seq.etas)) == len(seq.etas)


def validate_circuit(seq: AltSequence, K: PureComplex) -> bool:
    """
    True iff `seq` is an (m,n)-circuit sequence of K.

    A circuit is a closed walk whose σ items, apart from the repeated base
    point, are pairwise distinct and whose facets are pairwise distinct.

    Raises:
        ForeignSimplex: If an item is not a simplex of K.
    """
    require_references(seq, K)
    return _is_circuit(seq)


def validate_cycle(seq: AltSequence, K: PureComplex) -> Optional[CycleWitness]:
    """
    Certify that `seq` is an (m,n)-simplicial cycle sequence of K.

    On top of being a circuit, the sequence needs at least three facets, a
    base point σ_1 that is a face of no facet strictly between η_1 and η_r,
    and pairwise distinct connecting (n-1)-simplices for σ_2 .. σ_r.

    Args:
        seq (AltSequence): The candidate closed sequence.
        K (PureComplex): The complex.

    Returns:
        Optional[CycleWitness]: The witness, or None if `seq` is not a
            simplicial cycle sequence of K.

    Example:
        >>> K = build_complex([[7, 8, 9], [8, 9, 10], [7, 8, 10]])
        >>> seq = AltSequence.of([[7, 8], [7, 8, 9], [8, 9], [8, 9, 10], [8, 10], [7, 8, 10], [7, 8]])
        >>> validate_cycle(seq, K).connectors
        ((8, 9), (8, 10))
    """
    if not references_complex(seq, K) or not _is_circuit(seq):
        return None
    if seq.length < 3:
        return None
    if any(is_face(seq.start, eta) for eta in seq.etas[1:-1]):
        return None
    connectors = choose_distinct(connector_options(seq))
    if connectors is None:
        return None
    return CycleWitness(seq=seq, connectors=tuple(connectors))


def _chains(
    K: PureComplex, base: Simplex, distinct_ridges: bool
) -> Iterator[List[Simplex]]:
    """
    Facet chains η_1 .. η_r around `base`.

    η_1 and η_r contain `base`, the facets between them do not, there is at
    least one facet between them, and consecutive facets share an
    (n-1)-face. With `distinct_ridges` the shared faces are pairwise distinct.
    """
    neighbours = facet_neighbours(K)

    def extend(chain: List[Simplex], ridges: List[Simplex]) -> Iterator[List[Simplex]]:
        last = chain[-1]
        for nxt in neighbours[last]:
            if nxt in chain:
                continue
            ridge = shared_ridge(last, nxt)
            if distinct_ridges and ridge in ridges:
                continue
            if is_face(base, nxt):
                if len(chain) >= 2:
                    yield chain + [nxt]
                continue
            chain.append(nxt)
            ridges.append(ridge)
            yield from extend(chain, ridges)
            chain.pop()
            ridges.pop()

    for start in K.facets_containing(base):
        for first in neighbours[start]:
            if is_face(base, first):
                continue
            yield from extend([start, first], [shared_ridge(start, first)])


def _cycle_from_chain(
    K: PureComplex, m: int, base: Simplex, chain: List[Simplex]
) -> Optional[CycleWitness]:
    """Build a cycle on a chain by reducing the walk through its interior facets."""
    interior = chain[1:-1]
    ridges = [shared_ridge(f, g) for f, g in zip(chain, chain[1:])]
    if any(r == s for r, s in zip(ridges, ridges[1:])):
        return None
    top = interleave(K.n - 1, ridges, interior)
    if top.start == top.end:
        return None
    path = reduce_walk(top, K)
    chosen = choose_distinct(
        [faces_of(s, m) for s in path.sigmas], forbidden=frozenset((base,))
    )
    if chosen is None:
        return None
    seq = interleave(m, [base, *chosen, base], [chain[0], *path.etas, chain[-1]])
    return validate_cycle(seq, K)


def _cycle_from_ridges(
    m: int, K: PureComplex, base: Simplex, chain: List[Simplex]
) -> Optional[CycleWitness]:
    ridges = [shared_ridge(f, g) for f, g in zip(chain, chain[1:])]
    chosen = choose_distinct(
        [faces_of(r, m) for r in ridges], forbidden=frozenset((base,))
    )
    if chosen is None:
        return None
    return validate_cycle(interleave(m, [base, *chosen, base], chain), K)


@lru_cache(maxsize=1024)
def find_cycle(K: PureComplex, m: int) -> Optional[CycleWitness]:
    """
    Search K for an (m,n)-simplicial cycle sequence.

    An (m,n)-cycle exists exactly when some chain of at least three distinct
    facets, consecutive ones sharing an (n-1)-face, starts and ends at facets
    containing an m-simplex σ_1 that misses a facet in between. Chains are
    enumerated per base m-simplex in lexicographic order with the in-between
    facets avoiding σ_1; on each, the walk through the shared faces is reduced
    and projected to distinct m-faces. If no chain yields a cycle that way,
    every chain with distinct shared faces is tried directly, which makes the
    search exhaustive.

    Args:
        K (PureComplex): The complex.
        m (int): Cycle dimension, 0 <= m <= n - 1.

    Returns:
        Optional[CycleWitness]: A cycle, or None if K has no (m,n)-cycle.

    Raises:
        DimensionOutOfRange: If m is not in 0..n-1.
    """
    if not 0 <= m <= K.n - 1:
        raise DimensionOutOfRange(f"Cycle dimension must be in 0..{K.n - 1}, got {m}.")

    bases = [s for s in sorted(K.faces[m]) if len(K.facets_containing(s)) >= 2]
    for base in bases:
        for chain in _chains(K, base, distinct_ridges=False):
            witness = _cycle_from_chain(K, m, base, chain)
            if witness is not None:
                logger.debug("Found (%d,%d)-cycle at %s", m, K.n, base)
                return witness

    for base in bases:
        for chain in _chains(K, base, distinct_ridges=True):
            witness = _cycle_from_ridges(m, K, base, chain)
            if witness is not None:
                logger.warning(
                    "(%d,%d)-cycle at %s found only by exhaustive chain search",
                    m,
                    K.n,
                    base,
                )
                return witness
    return None


def is_acyclic(K: PureComplex) -> bool:
    """True iff K has no (m,n)-simplicial cycle sequence for any 0 <= m <= n - 1."""
    return all(find_cycle(K, m) is None for m in range(K.n))


def find_circuit(K: PureComplex, m: int) -> Optional[AltSequence]:
    """
    Search K for an (m,n)-circuit sequence.

    Circuits are exactly the cycles of the bipartite incidence graph between
    m-simplices and facets. The cycle found by `networkx.find_cycle` is
    rotated to start at its least m-simplex.

    Raises:
        DimensionOutOfRange: If m is not in 0..n-1.

    Example:
        >>> find_circuit(build_complex([[1, 2, 3], [3, 4, 5], [5, 6, 1]]), 1) is None
        True
    """
    if not 0 <= m <= K.n - 1:
        raise DimensionOutOfRange(f"Circuit dimension must be in 0..{K.n - 1}, got {m}.")

    G = nx.Graph()
    for sigma in sorted(K.faces[m]):
        for eta in K.facets_containing(sigma):
            G.add_edge(("s", sigma), ("f", eta))
    try:
        edges = nx.find_cycle(G)
    except nx.NetworkXNoCycle:
        return None

    nodes = [u for u, _ in edges]
    start = min(
        (i for i, (kind, _) in enumerate(nodes) if kind == "s"),
        key=lambda i: nodes[i][1],
    )
    rotated = nodes[start:] + nodes[:start]
    items = tuple(s for _, s in rotated) + (rotated[0][1],)
    return AltSequence(m=m, items=items)


def joint_cyclicity_premise(K: PureComplex) -> Optional[Tuple[int, Simplex]]:
    """
    Find a joint m-simplex, m <= n - 2, that lies in no joint (n-1)-simplex.

    On a connected complex such a simplex forces an (m,n)-simplicial cycle.

    Returns:
        Optional[Tuple[int, Simplex]]: The least such (m, simplex), or None.

    Raises:
        NotConnected: If K is not connected.
    """
    if not is_connected(K):
        raise NotConnected("The joint-simplex cyclicity test needs a connected complex.")
    joint_ridges = joint_simplices(K, K.n - 1)
    for m in range(K.n - 1):
        for s in sorted(joint_simplices(K, m)):
            if not any(is_face(s, ridge) for ridge in joint_ridges):
                return m, s
    return None
