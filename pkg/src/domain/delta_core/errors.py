"""Diagonal-product errors."""

from __future__ import annotations

from ..errors import LabConfigError, LabInvariantError


class DeltaParamsError(LabConfigError):
    """Raised when a level sequence does not describe an admissible diagonal product."""

    def __init__(self, message: str, *, field: str, value: object = None) -> None:
        super().__init__(message, field=field, value=value)
        self.field = field
        self.value = value


class GeneratorError(LabConfigError):
    """Raised for an unknown generator label."""

    def __init__(self, message: str, *, label: str) -> None:
        super().__init__(message, label=label)
        self.label = label


class DistanceModeError(LabInvariantError):
    """Raised when a pair does not meet the preconditions of a distance bound."""

    def __init__(self, message: str, *, mode: str) -> None:
        super().__init__(message, mode=mode)
        self.mode = mode


class ElementFormatError(LabConfigError):
    """Raised when serialized element text cannot be decoded."""


__all__ = ["DeltaParamsError", "DistanceModeError", "ElementFormatError", "GeneratorError"]
