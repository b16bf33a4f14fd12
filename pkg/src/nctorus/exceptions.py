"""Exception hierarchy for nctorus.

Every error raised by the library derives from :class:`NCTorusError`, so
callers can catch the whole family at once. Most classes also derive from
the closest builtin exception so that generic handlers keep working.
"""

__all__ = [
    "CompositionOverflowError",
    "ConfigError",
    "ConvergenceError",
    "DegenerateDegreeError",
    "DomainError",
    "IndeterminateRankError",
    "InvariantViolationError",
    "LatticeBoundaryError",
    "NCTorusError",
    "NonIntegrableError",
    "ShapeMismatchError",
    "ZeroRankError",
    "ZeroRankTargetError",
]


class NCTorusError(Exception):
    """Base class for all nctorus errors."""


class DomainError(NCTorusError, ValueError):
    """An input lies outside the domain where an operation is defined."""


class ZeroRankError(NCTorusError, ValueError):
    """The rank ``c*theta + d`` of a label vanishes (non-projective label)."""


class ZeroRankTargetError(ZeroRankError):
    """The rank vanishes at the target parameter of an equivalence functor."""


class DegenerateDegreeError(NCTorusError, ValueError):
    """A degree that must be nonzero is zero."""


class NonIntegrableError(DomainError):
    """A Gaussian exponent has a non-negative real quadratic part."""


class ConvergenceError(NCTorusError, ArithmeticError):
    """A lattice sum could not be truncated within the term cap."""


class IndeterminateRankError(NCTorusError, ArithmeticError):
    """Singular values cluster at the rank threshold."""


class LatticeBoundaryError(NCTorusError, ArithmeticError):
    """A lattice-membership test is too close to call."""


class ShapeMismatchError(DomainError):
    """Operands have incompatible shapes, labels or leg counts."""


class InvariantViolationError(NCTorusError, AssertionError):
    """A provably impossible configuration was encountered."""


class ConfigError(NCTorusError, ValueError):
    """Invalid run configuration."""


class CompositionOverflowError(NCTorusError, OverflowError):
    """An integer matrix entry left the signed 64-bit range."""
