"""Simplicial tree certification straight from the definition."""

from typing import Tuple

from certify.tree_certifier import TreeCertifier
from complexes.core import PureComplex
from complexes.cycles import is_acyclic
from complexes.paths import is_connected


def certify_by_definition(K: PureComplex) -> bool:
    """A simplicial tree is a connected complex with no simplicial cycle of any dimension."""
    return is_connected(K) and is_acyclic(K)


class DefinitionCertifier(TreeCertifier):
    """Certifies trees as connected and acyclic complexes."""

    name = "by_definition"

    def examine(self, K: PureComplex) -> Tuple[bool, None]:
        return certify_by_definition(K), None
