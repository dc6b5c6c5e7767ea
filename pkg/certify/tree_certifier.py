"""Abstract base class for simplicial tree certifiers."""

from abc import ABC, abstractmethod
from typing import Any, Tuple

from complexes.core import PureComplex


class TreeCertifier(ABC):
    """
    Abstract base class for the independent simplicial-tree characterizations.

    Each concrete certifier decides whether a pure complex is a simplicial
    tree by one characterization only, so that the verdicts can be compared
    against each other. Subclasses set `name`, the key their verdict is
    reported under, and implement `examine()`, which also hands back the
    evidence the verdict rests on.

    Attributes:
        name (str): Report key of the certifier.

    Example:
        >>> class SingleFacetCertifier(TreeCertifier):
        ...     name = "single_facet"
        ...     def examine(self, K):
        ...         return len(K.facets) == 1, None

        >>> SingleFacetCertifier().certify(build_complex([[1, 2, 3]]))
        True
    """

    name: str = ""

    @abstractmethod
    def examine(self, K: PureComplex) -> Tuple[bool, Any]:
        """
        Decide whether K is a simplicial tree and keep the evidence.

        Args:
            K (PureComplex): The complex to certify.

        Returns:
            Tuple[bool, Any]: The verdict of this characterization and its
                evidence, or None when it has none.
        """

    def certify(self, K: PureComplex) -> bool:
        """Decide whether K is a simplicial tree."""
        verdict, _ = self.examine(K)
        return verdict
