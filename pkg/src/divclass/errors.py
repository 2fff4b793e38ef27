"""Exception hierarchy shared by the whole package."""


class DivclassError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DivclassError):
    """Caller-supplied data is malformed or out of range (CLI exit code 1)."""


class LimitExceededError(InputError):
    """A configurable enumeration cap was hit before the computation finished."""


class InternalInvariantError(DivclassError):
    """A mathematical invariant the library guarantees was violated.

    Seeing this means a bug in the library, never bad input
    (CLI exit code 2).
    """
