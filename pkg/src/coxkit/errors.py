"""Shared exception types.

Every error raised by the library derives from DomainError so the CLI can
separate bad input data from bad flags.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


class NotSymmetric(DomainError):
    """Laurent polynomial is not invariant under q -> 1/q."""


class ExactDivisionError(DomainError):
    """Polynomial division that was promised to be exact left a remainder."""


class BadRank(DomainError):
    """Rank outside the valid range for the requested diagram family."""


class UnknownVertex(DomainError):
    """Vertex index not present in the diagram."""


class NotATree(DomainError):
    """Operation requires a connected acyclic diagram."""


class ZeroDenominator(DomainError):
    """Rational function with zero denominator."""


class ShapeViolation(DomainError):
    """Diagram does not have the shape required by the identity."""


class SizeMismatch(DomainError):
    """Sample-point lists or matrix dimensions do not agree."""


class DimensionMismatch(DomainError):
    """Block matrices with incompatible dimensions."""


class PreconditionABneq2C(DomainError):
    """The block relation A*B = 2*C fails."""


class BadType(DomainError):
    """Not a valid affine ADE family label."""


class IndexOutOfRange(DomainError):
    """Vertex or series index outside the allowed range."""


class NotASquare(DomainError):
    """Integer that was expected to be a perfect square is not."""


class StrandMismatch(DomainError):
    """Braid words on different strand counts."""


class NotPure(DomainError):
    """Braid word with a nontrivial strand permutation."""


class UnknownClosure(DomainError):
    """No catalogued Alexander-Conway polynomial for the requested closure."""


class UsageError(Exception):
    """Bad command-line flags (kept apart from DomainError on purpose)."""
