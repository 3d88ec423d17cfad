"""Exception hierarchy shared by every module of the package."""


class HarmonicPeriodsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(HarmonicPeriodsError, ValueError):
    """Input rejected before any analysis ran."""


class EmptyTaskSet(ValidationError):
    pass


class InvalidTask(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class MultiplierOutOfRange(ValidationError):
    pass


class NotHarmonic(ValidationError):
    pass


class InvalidRange(ValidationError):
    pass


class ParseError(ValidationError):
    """Malformed task-set file. ``locus`` names the offending line or record."""

    def __init__(self, message, locus=None):
        self.locus = locus
        if locus is not None:
            message = f"{locus}: {message}"
        super().__init__(message)


class ConvergenceError(HarmonicPeriodsError, RuntimeError):
    """Response-time iteration hit its iteration cap."""


class MismatchError(HarmonicPeriodsError, AssertionError):
    """Brute force and DPHS disagreed on an optimum. Never expected."""


class IndexOutOfRange(HarmonicPeriodsError, IndexError):
    pass
