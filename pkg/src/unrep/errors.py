"""Error taxonomy shared by all modules.

Three failure classes matter to callers (and map to CLI exit codes):
bad input, a blown capacity bound, and a mathematically impossible state.
"""


class UnrepError(Exception):
    """Base class for all library errors."""


class InputError(UnrepError):
    """Malformed input or violated operation precondition (CLI exit 1)."""


class CapacityError(UnrepError):
    """A configured size bound was exceeded (CLI exit 2)."""


class TheoremViolation(UnrepError):
    """A property that is mathematically guaranteed failed to hold.

    Raising this signals an engine bug, never bad input (CLI exit 3).
    """
