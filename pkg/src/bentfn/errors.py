"""Exception types shared across the package."""


class BentfnError(Exception):
    """Base class for all errors raised by this package."""


class DimensionOutOfRange(BentfnError):
    """A dimension falls outside the supported range."""


class NonPrimitivePolynomial(BentfnError):
    """The supplied polynomial is reducible or does not generate the full multiplicative group."""


class DimensionMismatch(BentfnError):
    """Operands live in different dimensions."""


class OddDimension(BentfnError):
    """An even-dimensional function was required."""


class NotBent(BentfnError):
    """The function is not bent."""


class NotNearBent(BentfnError):
    """The function is not near-bent.

    ``histogram`` carries the offending Walsh coefficient distribution when known.
    """

    def __init__(self, message, histogram=None):
        super().__init__(message)
        self.histogram = histogram


class DerivativeNotConstant(BentfnError):
    """The derivative in the unit direction is not a constant function."""


class ConditionViolation(BentfnError):
    """An arithmetic precondition of a family generator failed."""


class ConditionTNotMet(BentfnError):
    """The component sum is not the trace (up to a constant), so the check does not apply."""


class InvalidExponentSet(BentfnError):
    """The exponent set collapses or is otherwise unusable."""


class ParseError(BentfnError):
    """A trace expression could not be parsed; ``position`` is the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentOutOfRange(ParseError):
    """A parsed exponent is negative."""


class NotBooleanConsistent(BentfnError):
    """Internal consistency violation: interpolation coefficients do not show the
    conjugacy pattern of a Boolean-valued function. Indicates a bug, not bad input."""


class BentVerificationFailed(BentfnError):
    """A construction that should always produce a bent function did not; defensive check."""
