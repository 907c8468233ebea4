"""Exception hierarchy shared across the package."""


class SixflowError(Exception):
    """Base class for all package errors."""


class InputError(SixflowError):
    """Malformed arguments, files, or flow assignments."""


class StructuralError(SixflowError):
    """A graph precondition is violated (bridge, disconnection, no paths).

    Carries enough detail to name the offending structure in diagnostics.
    """

    def __init__(self, message, bridge=None, component=None):
        super().__init__(message)
        self.bridge = bridge
        self.component = component


class GuardError(SixflowError):
    """An enumeration size guard was exceeded; the oracle refuses to run."""


class InternalCheckError(SixflowError):
    """An internal invariant failed. Always a defect, never a usage error."""
