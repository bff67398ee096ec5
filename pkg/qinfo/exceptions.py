class QinfoError(Exception):
    """Base class for errors raised deliberately by qinfo."""


class ValidationError(QinfoError):
    """
    Raised when a value violates one of its invariants.

    Carries the name of the violated invariant and the magnitude of the worst
    offending entry so callers can report how far off the value was.
    """
    invariant = "valid"

    def __init__(self, magnitude, invariant=None, message=None):
        self.magnitude = magnitude
        if invariant:
            self.invariant = invariant

        if not message:
            message = "Invariant '{}' violated, worst offending magnitude {:.6g}".format(
                self.invariant, magnitude)

        super().__init__(message)


class NotHermitian(ValidationError):
    invariant = "hermitian"


class TraceNotOne(ValidationError):
    invariant = "unit trace"


class NegativeEigenvalue(ValidationError):
    invariant = "positive semidefinite"


class NotUnitary(ValidationError):
    invariant = "unitary"


class NotNormalized(ValidationError):
    invariant = "normalized"


class NegativeProbability(ValidationError):
    invariant = "nonnegative probability"


class ZeroVector(ValidationError):
    invariant = "nonzero vector"


class EmptyPhaseList(ValidationError):
    invariant = "nonempty phase list"


class DimensionMismatch(QinfoError):
    """Raised when operands have incompatible dimensions."""


class OutOfRange(QinfoError):
    """Raised when an integer argument lies outside its supported range."""


class AllAmplitudesExcluded(QinfoError):
    """Raised when a reduction excludes every amplitude of the measured object.

    Such a measurement is not fruitful: no state of the object survives it.
    """


class ParseError(QinfoError):
    """Raised when a state spec document cannot be read."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__("{} (line {}, column {})".format(message, line, column))


class UnknownScenario(QinfoError):
    """Raised when a scenario name is not registered."""


class BadParameter(QinfoError):
    """Raised when a scenario or sweep parameter is missing, unknown or invalid."""

    def __init__(self, key, message):
        self.key = key
        super().__init__("Bad parameter '{}': {}".format(key, message))


class ConsoleError(QinfoError):
    """Raised when an error occurs which needs to be show to the user."""
