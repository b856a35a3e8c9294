"""Error buckets shared by every domain package and mapped to CLI exit codes."""

from __future__ import annotations

from typing import Any


class LabError(Exception):
    """Base class carrying keyword attributes for machine-readable failure records."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.details = details

    def record(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self), **self.details}


class LabInvariantError(LabError, RuntimeError):
    """An asserted mathematical invariant or structural precondition failed."""


class LabConfigError(LabError, ValueError):
    """Parameters do not describe an admissible experiment."""


class BudgetExceededError(LabError, RuntimeError):
    """A requested enumeration or search would exceed the configured budget."""


__all__ = ["BudgetExceededError", "LabConfigError", "LabError", "LabInvariantError"]
