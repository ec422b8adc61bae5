"""Exception types shared across the package."""


class QEulerError(Exception):
    """Base class for all package-specific errors."""


class PoleAtSpecialization(QEulerError):
    """Evaluation at a rational point where a denominator vanishes."""

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class IndeterminateValuation(QEulerError):
    """A truncated series is zero on its whole stored window, so its
    valuation cannot be reported."""


class InsufficientPrecision(QEulerError):
    """An operation would produce an empty guaranteed window."""


class DegenerateSequence(QEulerError):
    """A required member of a P_n / beta_n sequence is zero or two members
    coincide within the working precision."""


class UnsupportedValuation(QEulerError):
    """First-order solver called with a leading coefficient of valuation < 1."""


class NonIntegerSlope(QEulerError):
    """Newton polygon has a non-integer slope; the summability classifier
    only covers integer slopes."""


class MissingEndpointCoefficient(QEulerError):
    """Operator passed to the Newton polygon with a vanishing order-0 or
    top-order coefficient."""


class DuplicateNode(QEulerError):
    """Interpolation nodes are not pairwise distinct."""


class UnknownIdentity(QEulerError):
    """Verification catalog lookup with an unknown identity id."""
