"""Simplicial tree certification by connectivity and one k-simplex count."""

from typing import Dict, Optional, Tuple

from certify.tree_certifier import TreeCertifier
from complexes.core import PureComplex, alpha, tree_count_formula
from complexes.errors import DimensionOutOfRange
from complexes.paths import is_connected


def certify_by_count(K: PureComplex, k: int) -> bool:
    """
    Decide tree-ness from connectivity and the number of k-simplices.

    A connected pure n-complex on p vertices is a tree exactly when, for some
    1 <= k <= n, it has (p - n) * C(n, k) + C(n, k + 1) k-simplices.

    Args:
        K (PureComplex): The complex.
        k (int): Simplex dimension to count, 1 <= k <= n.

    Returns:
        bool: True when K is connected and its k-count matches the tree count.

    Raises:
        DimensionOutOfRange: If k is not in 1..n.

    Example:
        >>> certify_by_count(build_complex([[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 6]]), 1)
        True
    """
    if not 1 <= k <= K.n:
        raise DimensionOutOfRange(f"Count certification needs 1 <= k <= {K.n}, got {k}.")
    if not is_connected(K):
        return False
    return alpha(K, k) == tree_count_formula(len(K.faces[0]), K.n, k)


def count_verdicts(K: PureComplex) -> Dict[int, bool]:
    """`certify_by_count` for every k in 1..n."""
    return {k: certify_by_count(K, k) for k in range(1, K.n + 1)}


class CountCertifier(TreeCertifier):
    """
    Certifies trees by the k-simplex count.

    With `k` unset the verdict is positive when the count matches for some k.

    Args:
        k (Optional[int]): A fixed simplex dimension, or None for any.
    """

    name = "by_count"

    def __init__(self, k: Optional[int] = None) -> None:
        self.k = k

    def examine(self, K: PureComplex) -> Tuple[bool, Dict[int, bool]]:
        if self.k is not None:
            verdicts = {self.k: certify_by_count(K, self.k)}
        else:
            verdicts = count_verdicts(K)
        return any(verdicts.values()), verdicts
