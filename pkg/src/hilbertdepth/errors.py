"""Exception types shared across the package."""


class TooLarge(ValueError):
    """A requested computation exceeds its feasibility guard."""


class RangeError(ValueError):
    """An argument lies outside the range for which the operation is defined."""


class InternalDisagreement(RuntimeError):
    """Two routes that must agree returned different values.

    This signals an implementation bug, never a user error: the routes
    evaluate identities that hold for every admissible input.
    """
