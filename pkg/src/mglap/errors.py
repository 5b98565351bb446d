"""Exception hierarchy for mglap.

Every error raised on invalid input derives from :class:`MGLError`, which is a
``ValueError`` so callers that only care about bad input can catch that.
"""


class MGLError(ValueError):
    """Base class for all mglap input and numerical errors."""


class UnsortedPositions(MGLError):
    pass


class NonpositiveWeight(MGLError):
    pass


class WeightSumInvalid(MGLError):
    pass


class ConstraintViolated(MGLError):
    pass


class ShiftTooLarge(MGLError):
    pass


class DomainError(MGLError):
    pass


class MeasureMismatch(MGLError):
    pass


class DegenerateMeasure(MGLError):
    """Raised when an operator is requested for a single-atom measure."""


class NotADerivative(MGLError):
    """The input has nonzero total mu-integral, so it has no mu-antiderivative."""


class NotSymmetric(MGLError):
    pass


class NoConvergence(MGLError):
    pass


class ZeroVector(MGLError):
    pass


class IndexOutOfRange(MGLError):
    pass


class LengthMismatch(MGLError):
    pass


class ZeroKappa(MGLError):
    pass


class MeasureFormatError(MGLError):
    """Malformed measure JSON (non-finite numbers, duplicate positions, bad keys)."""
