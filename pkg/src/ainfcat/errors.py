"""Exception types shared across the package."""


class AinfError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(AinfError):
    """Two scalars (or structures) over different fields were combined."""


class NonComposableError(AinfError):
    """A chain of morphisms does not compose (object or degree mismatch)."""


class PreconditionError(AinfError):
    """A documented precondition of an operation was violated."""


class ArityLimitError(AinfError):
    """An evaluation would need operations beyond the declared max arity."""


class SamplingBudgetError(AinfError):
    """Rejection sampling exhausted its attempt budget."""


class FileFormatError(AinfError):
    """A category/twisted-complex/morphism file failed to parse or validate.

    `location` is a human-readable pointer into the document.
    """

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
