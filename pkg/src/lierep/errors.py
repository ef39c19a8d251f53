"""Exception hierarchy shared across the package."""


class LieError(Exception):
    """Base class for all package errors."""


class CapExceeded(LieError):
    """A configurable resource cap was hit.  Recoverable: raise the cap and retry."""


class InvariantViolation(LieError):
    """An internal consistency check failed.  Indicates a bug, not bad input."""
