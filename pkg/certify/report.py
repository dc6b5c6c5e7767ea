"""Cross-certification of simplicial trees by all five characterizations."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from certify.acyclic_counts import AcyclicCountsCertifier
from certify.complete_ordering import CompleteOrderingCertifier
from certify.count import CountCertifier
from certify.definition import DefinitionCertifier
from certify.tree_certifier import TreeCertifier
from certify.unique_paths import UniquePathsCertifier, UniquePathsConditions
from complexes.core import PureComplex, Simplex
from complexes.cycles import CycleWitness, find_cycle
from complexes.paths import AltSequence, Ordering, components, is_connected

logger = logging.getLogger(__name__)

CERTIFIERS: Tuple[TreeCertifier, ...] = (
    DefinitionCertifier(),
    CompleteOrderingCertifier(),
    CountCertifier(),
    AcyclicCountsCertifier(),
    UniquePathsCertifier(),
)


@dataclass(frozen=True)
class Witnesses:
    """Evidence against tree-ness collected while certifying."""

    cycle: Optional[CycleWitness] = None
    components: Optional[List[Tuple[Simplex, ...]]] = None
    duplicate_paths: Optional[Tuple[AltSequence, AltSequence]] = None

    @property
    def empty(self) -> bool:
        return self.cycle is None and self.components is None and self.duplicate_paths is None

    def to_dict(self) -> Dict:
        doc: Dict = {}
        if self.cycle is not None:
            doc["cycle"] = self.cycle.to_dict()
        if self.components is not None:
            doc["components"] = [[list(f) for f in cls] for cls in self.components]
        if self.duplicate_paths is not None:
            doc["duplicate_paths"] = [seq.to_dict() for seq in self.duplicate_paths]
        return doc


@dataclass(frozen=True)
class CertReport:
    """
    Verdicts of the five tree characterizations on one complex.

    Attributes:
        by_definition (bool): Connected and acyclic.
        by_complete_ordering (bool): An (n-1)-complete ordering exists.
        ordering (Optional[Ordering]): That ordering, when found.
        by_count (Dict[int, bool]): Connected with the tree k-count, per k in 1..n.
        by_acyclic_counts (bool): Some cycle dimension missing plus the two top counts.
        by_unique_paths (bool): Connected and all unique-path conditions hold.
        unique_paths_conditions (UniquePathsConditions): The three conditions separately.
        witnesses (Witnesses): Cycle, components or duplicate paths found.
    """

    by_definition: bool
    by_complete_ordering: bool
    ordering: Optional[Ordering]
    by_count: Dict[int, bool]
    by_acyclic_counts: bool
    by_unique_paths: bool
    unique_paths_conditions: UniquePathsConditions
    witnesses: Witnesses = field(default_factory=Witnesses)

    @property
    def verdicts(self) -> Dict[str, bool]:
        return {
            "by_definition": self.by_definition,
            "by_complete_ordering": self.by_complete_ordering,
            "by_count": any(self.by_count.values()),
            "by_acyclic_counts": self.by_acyclic_counts,
            "by_unique_paths": self.by_unique_paths,
        }

    @property
    def agree(self) -> bool:
        """True when all five characterizations give the same verdict."""
        return len(set(self.verdicts.values())) == 1

    @property
    def is_tree(self) -> bool:
        return self.by_definition

    def to_dict(self) -> Dict:
        return {
            "by_definition": self.by_definition,
            "by_complete_ordering": self.by_complete_ordering,
            "ordering": self.ordering.to_dict() if self.ordering else None,
            "by_count": {str(k): v for k, v in self.by_count.items()},
            "by_acyclic_counts": self.by_acyclic_counts,
            "by_unique_paths": self.by_unique_paths,
            "unique_paths_conditions": self.unique_paths_conditions.to_dict(),
            "agree": self.agree,
            "witnesses": self.witnesses.to_dict(),
        }


def cross_certify(K: PureComplex) -> CertReport:
    """
    Run every tree characterization on K and collect the evidence.

    Args:
        K (PureComplex): The complex.

    Returns:
        CertReport: All verdicts plus witnesses. A complex that is not a tree
            always gets a witness: its components when disconnected, a cycle
            otherwise.

    Example:
        >>> report = cross_certify(build_complex([[1, 2, 3], [2, 3, 4], [2, 4, 5]]))
        >>> report.is_tree, report.agree
        (True, True)
    """
    verdicts: Dict[str, bool] = {}
    evidence: Dict[str, Any] = {}
    for certifier in CERTIFIERS:
        verdicts[certifier.name], evidence[certifier.name] = certifier.examine(K)

    connected = is_connected(K)
    conditions: UniquePathsConditions = evidence["by_unique_paths"]
    cycle = next(
        (c for c in (find_cycle(K, m) for m in range(K.n)) if c is not None),
        None,
    )

    report = CertReport(
        by_definition=verdicts["by_definition"],
        by_complete_ordering=verdicts["by_complete_ordering"],
        ordering=evidence["by_complete_ordering"],
        by_count=evidence["by_count"],
        by_acyclic_counts=verdicts["by_acyclic_counts"],
        by_unique_paths=verdicts["by_unique_paths"],
        unique_paths_conditions=conditions,
        witnesses=Witnesses(
            cycle=cycle,
            components=None if connected else components(K),
            duplicate_paths=conditions.duplicate,
        ),
    )
    if not report.agree:
        logger.error("Tree characterizations disagree on %s: %s", K.facets, report.verdicts)
    else:
        logger.info("Certified %s: tree=%s", K.facets, report.is_tree)
    return report
