"""Finite group and marking errors."""

from __future__ import annotations

from ..errors import LabConfigError, LabInvariantError


class GroupTableError(LabInvariantError):
    """Raised when a multiplication table violates a group axiom."""

    def __init__(self, message: str, *, law: str, witness: tuple[int, ...] = ()) -> None:
        super().__init__(message, law=law, witness=witness)
        self.law = law
        self.witness = witness


class UnreachableElementError(LabInvariantError):
    """Raised when a generating set does not reach every element."""

    def __init__(self, message: str, *, reached: int, order: int) -> None:
        super().__init__(message, reached=reached, order=order)
        self.reached = reached
        self.order = order


class MarkingError(LabInvariantError):
    """Raised when A and B do not mark the group as required."""

    def __init__(self, message: str, *, condition: str) -> None:
        super().__init__(message, condition=condition)
        self.condition = condition


class TableFormatError(LabConfigError):
    """Raised when a group table file cannot be parsed."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        super().__init__(message, line=line)
        self.line = line


__all__ = ["GroupTableError", "MarkingError", "TableFormatError", "UnreachableElementError"]
