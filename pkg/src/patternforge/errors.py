"""Exception types shared across the package."""


class PatternForgeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PatternForgeError):
    """Malformed or out-of-contract input (bad vertex index, unknown name, ...)."""


class CapacityError(PatternForgeError):
    """A hard size cap was exceeded; reported instead of running forever."""


class InternalError(PatternForgeError):
    """A self-check failed; signals a construction bug, never bad user input."""
