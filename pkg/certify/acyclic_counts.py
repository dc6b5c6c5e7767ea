"""Simplicial tree certification by counts on a complex lacking some cycle dimension."""

from typing import Tuple

from certify.tree_certifier import TreeCertifier
from complexes.core import PureComplex
from complexes.cycles import find_cycle


def certify_by_acyclic_counts(K: PureComplex) -> bool:
    """
    Decide tree-ness without testing connectivity.

    K on p vertices is a tree exactly when it has no (m,n)-simplicial cycle
    for some 0 <= m <= n - 1, has (p - n) * n + 1 (n-1)-simplices and has
    p - n facets.

    Example:
        >>> certify_by_acyclic_counts(build_complex([[1, 2, 3], [2, 3, 4], [4, 5, 6], [1, 5, 6]]))
        False
    """
    n = K.n
    p = len(K.faces[0])
    if len(K.faces[n]) != p - n or len(K.faces[n - 1]) != (p - n) * n + 1:
        return False
    return any(find_cycle(K, m) is None for m in range(n))


class AcyclicCountsCertifier(TreeCertifier):
    """Certifies trees from a missing cycle dimension and the two top counts."""

    name = "by_acyclic_counts"

    def examine(self, K: PureComplex) -> Tuple[bool, None]:
        return certify_by_acyclic_counts(K), None
