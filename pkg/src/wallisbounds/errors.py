"""Exception types raised by the bound routines."""


class DomainError(ValueError):
    """An argument lies outside the open domain of the bounded quantity."""


class ToleranceUnreachable(ArithmeticError):
    """No order up to ``K_MAX`` certifies the requested relative error."""


class PrecisionInsufficient(ArithmeticError):
    """A reference enclosure came out wider than its precision target."""
