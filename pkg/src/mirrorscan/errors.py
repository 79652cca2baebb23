"""Exception types raised across the package."""


class MirrorScanError(Exception):
    """Base class for all package errors."""


class InvalidParamsError(MirrorScanError, ValueError):
    pass


class UnsupportedCombinationError(MirrorScanError, ValueError):
    pass


class SingularFrequencyError(MirrorScanError, ValueError):
    pass


class StepTooLargeError(MirrorScanError, ValueError):
    pass


class CertificationError(MirrorScanError):
    """No sign-consistent adjoint exists for the given switching structure."""


class NotConvergedError(MirrorScanError):
    pass


class NotSteadyError(MirrorScanError):
    pass


class MismatchedGridsError(MirrorScanError, ValueError):
    pass


class OutOfRangeError(MirrorScanError, ValueError):
    pass


class DegenerateFitError(MirrorScanError, ValueError):
    pass


class InsufficientDataError(MirrorScanError, ValueError):
    pass


class ConfigError(MirrorScanError, ValueError):
    """Malformed or unknown entry in a run configuration file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
