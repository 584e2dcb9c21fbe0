"""Shared exception types."""


class InputError(ValueError):
    """Malformed or contract-violating input (CLI exit code 2)."""


class ResourceLimitError(RuntimeError):
    """Enumeration exceeded the configured path cap (CLI exit code 3)."""
