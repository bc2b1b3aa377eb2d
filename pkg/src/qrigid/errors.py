class QRigidError(Exception):
    """Base class for errors raised by this package."""


class ResourceError(QRigidError):
    """A requested computation exceeds the configured dimension budget."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class InvalidRankError(QRigidError, ValueError):
    pass


class InvalidWeightError(QRigidError, ValueError):
    pass


class ConfigError(QRigidError, ValueError):
    pass


class BoundaryMismatchError(QRigidError, ValueError):
    pass


class ScalarExtractionError(QRigidError):
    """An arrow that must be a multiple of a known one is not (an internal bug)."""
