"""Exception hierarchy for complex construction, sequence checks and searches."""


class ComplexError(ValueError):
    """Base class for every domain error raised by this project."""


class EmptyInput(ComplexError):
    """Raised when a complex is built from an empty facet set."""


class MixedDimension(ComplexError):
    """Raised when facets of a pure complex have unequal dimensions."""


class DimensionOutOfRange(ComplexError):
    """Raised when a dimension argument falls outside the valid range."""


class InvalidSimplex(ComplexError):
    """Raised for empty simplices, repeated vertices or negative vertex ids."""


class NotAFacet(ComplexError):
    """Raised when a simplex is expected to be a facet of a complex but is not."""


class ForeignSimplex(ComplexError):
    """Raised when a sequence references a simplex that is not in the complex."""


class InvalidSequence(ComplexError):
    """Raised when an alternating sequence has the wrong shape."""


class NotAWalk(ComplexError):
    """Raised when an operation requires a walk sequence and gets something else."""


class SameEndpoints(ComplexError):
    """Raised when a path operation is given identical endpoints."""


class DimensionMismatch(ComplexError):
    """Raised when two endpoints do not have a common dimension."""


class NotConnectedPair(ComplexError):
    """Raised when no (n-1,n)-path links any lifts of two endpoints."""


class EndpointMismatch(ComplexError):
    """Raised when two path sequences do not share both endpoints."""


class NotConnected(ComplexError):
    """Raised when an operation requires a connected complex."""


class NotATree(ComplexError):
    """Raised when an operation requires a certified simplicial tree."""


class TooLarge(ComplexError):
    """Raised when an input exceeds the configured desk-scale limits."""


class MalformedInput(ComplexError):
    """Raised when a facet-list or sequence document cannot be parsed."""
