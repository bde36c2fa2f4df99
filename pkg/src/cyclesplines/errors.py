"""Exception types shared across the package.

Everything raised deliberately by this library derives from
:class:`CycleSplinesError`, so callers can catch one base class.  Mixing in
the closest builtin (ValueError, ArithmeticError, RuntimeError) keeps the
types usable in generic code that never imports this module.
"""


class CycleSplinesError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(CycleSplinesError, ValueError):
    """A vector's length does not match the vertex count it is paired with."""


class NotInvertibleError(CycleSplinesError, ValueError):
    """Modular inverse requested for a non-coprime pair."""


class NoSolutionError(CycleSplinesError, ValueError):
    """The paired congruence system has no integer solution."""


class KingPreconditionError(CycleSplinesError, ValueError):
    """The king construction needs the last two edge labels to be coprime."""


class BasisStructureError(CycleSplinesError, ValueError):
    """A candidate basis is malformed: wrong count, wrong zero pattern, or a
    candidate that is not a spline at all."""


class NotInSpanError(CycleSplinesError, ArithmeticError):
    """A vector is not an integer combination of the given basis elements."""


class BudgetExceededError(CycleSplinesError, RuntimeError):
    """An exhaustive search was aborted after exhausting its budget."""


class InvariantViolationError(CycleSplinesError, RuntimeError):
    """An internal consistency check failed; this indicates a bug, not bad
    input."""
