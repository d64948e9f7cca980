"""Exceptions shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a configured enumeration budget."""
