"""Shared exception types."""


class BudgetError(RuntimeError):
    """An enumeration, search, or memory budget was exhausted."""


class CapExceededError(BudgetError):
    """A breadth-first radius cap was exhausted before the target was found."""
