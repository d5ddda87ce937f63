"""Exceptions shared across the package."""


class GuardExceeded(Exception):
    """A search-space or enumeration guard was exceeded.

    Raised before any work is attempted, so callers can retry with a
    larger explicit guard.
    """


class InconsistentSystemError(ValueError):
    """An operation that requires a consistent system received an
    inconsistent one (a mathematically meaningful negative, not an
    input-format error)."""
