"""
ERRORS

Exception hierarchy for the torus rotation laboratory.

Verification failures are NOT exceptions. They come back as reports with a
`passed` flag. Exceptions are reserved for calls that cannot be answered at all.
"""


class TorusLabError(Exception):
    """Root of all laboratory errors."""


class DomainError(TorusLabError, ValueError):
    """Argument outside the domain of an operation."""


class ConstructionError(TorusLabError):
    """A resonant chain (or a field built on it) cannot be constructed."""


class ParameterMismatchError(TorusLabError, ValueError):
    """Two objects compared against each other come from different fields."""


class ConfigError(TorusLabError, ValueError):
    """Invalid run configuration, config file or grid specification."""
