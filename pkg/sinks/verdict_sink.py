"""Abstract base class for conjecture verdict sinks."""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, List

if TYPE_CHECKING:
    from enumeration.conjectures import ConjectureVerdict


class VerdictSink(ABC):
    """
    Abstract base class for collectors of conjecture verdicts.

    A search hands every batch of verdicts it wants recorded to its sink.
    Concrete sinks (JSON-lines file, stdout) subclass `VerdictSink` and
    implement `add_verdicts()`; a sink only appends, so verdicts from several
    searches can share one.

    Example:
        >>> class CountingSink(VerdictSink):
        ...     def __init__(self):
        ...         self.count = 0
        ...     def add_verdicts(self, verdicts):
        ...         self.count += len(verdicts)
    """

    @abstractmethod
    def add_verdicts(self, verdicts: List["ConjectureVerdict"]) -> None:
        """
        Record a batch of verdicts.

        Args:
            verdicts (List[ConjectureVerdict]): Verdicts to append, in order.
        """
