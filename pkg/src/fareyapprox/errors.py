"""Exception types shared across the package."""


class FareyApproxError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(FareyApproxError, ValueError):
    """An argument violates a documented precondition."""


class EndOfSequenceError(FareyApproxError):
    """Asked for the successor of the final Farey term 1/1."""


class InfeasibleError(FareyApproxError):
    """The requested gap bound cannot be met under the denominator bound."""


class BudgetExceededError(FareyApproxError):
    """A configured work limit (scan length, point count, denominator cap) was hit.

    Deliberately distinct from an infeasibility verdict: hitting a budget
    means the question was left unanswered, not answered negatively.
    """


class InternalError(FareyApproxError):
    """A mathematically guaranteed search came up empty; indicates a bug."""
