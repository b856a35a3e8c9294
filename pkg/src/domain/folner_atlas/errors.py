"""Folner index and enumeration errors."""

from __future__ import annotations

from ..errors import BudgetExceededError, LabConfigError


class FolnerIndexError(LabConfigError):
    """Raised for a triple (n, i, j) outside the index set of the family."""

    def __init__(self, message: str, *, n: int, i: int, j: int) -> None:
        super().__init__(message, n=n, i=i, j=j)
        self.n = n
        self.i = i
        self.j = j


class EnumerationBudgetError(BudgetExceededError):
    """Raised when a set is larger than the enumeration budget allows."""

    def __init__(self, message: str, *, cardinality: int, budget: int) -> None:
        super().__init__(message, cardinality=cardinality, budget=budget)
        self.cardinality = cardinality
        self.budget = budget


class ChainSearchError(BudgetExceededError):
    """Raised when walking the chain does not reach a requested size in time."""

    def __init__(self, message: str, *, size: int, steps: int) -> None:
        super().__init__(message, size=size, steps=steps)
        self.size = size
        self.steps = steps


__all__ = ["ChainSearchError", "EnumerationBudgetError", "FolnerIndexError"]
