"""Shared exception types."""

from __future__ import annotations


class DimensionMismatchError(ValueError):
    """Operands live in spaces of different dimension."""


class EmptyDefiningSetError(ValueError):
    """The requested defining set has no elements, so no code exists."""


class BudgetExceededError(RuntimeError):
    """Requested enumeration exceeds the configured work budget."""

    def __init__(self, required: int, budget: int, what: str = "enumeration") -> None:
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} requires ~{required} elementary operations, "
            f"over the budget of {budget}"
        )
