"""Exception types shared across the package."""


class OrderLabError(Exception):
    pass


class InputError(OrderLabError, ValueError):
    """Malformed or inconsistent input (bad labels, mismatched universes, bad JSON)."""


class SizeError(InputError):
    """A universe is larger than an operation supports."""


class NotANestError(InputError):
    pass


class PreconditionError(OrderLabError, ValueError):
    """An operation's mathematical hypothesis does not hold for its argument."""


class HypothesisNotMetError(PreconditionError):
    pass
