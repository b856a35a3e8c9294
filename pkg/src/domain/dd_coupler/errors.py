"""Errors raised while building and auditing the injection between two diagonal products."""

from __future__ import annotations

from ..errors import LabConfigError, LabInvariantError


class CouplingIndexError(LabConfigError):
    """Raised when the target family cannot host G_n with at least one full cursor block."""

    def __init__(self, message: str, *, n: int, size: int | None = None) -> None:
        super().__init__(message, n=n, size=None if size is None else str(size))
        self.n = n
        self.size = size


class CursorMapError(LabConfigError):
    """Raised for cursors outside [0, D_n - 1] or outside the image of u."""

    def __init__(self, message: str, *, v: int) -> None:
        super().__init__(message, v=v)
        self.v = v


class SpreadingError(LabConfigError):
    """Raised for values outside the domain or the image of the spreading map."""

    def __init__(self, message: str, *, value: int) -> None:
        super().__init__(message, value=str(value))
        self.value = value


class TargetDomainError(LabConfigError):
    """Raised when a target element or number lies outside K_n or outside [0, max theta_n]."""

    def __init__(self, message: str, *, element: object = None) -> None:
        super().__init__(message, element=None if element is None else str(element))
        self.element = element


class InjectionConsistencyError(LabInvariantError):
    """Raised when an injected element falls outside H_n or a numbering fails to invert."""

    def __init__(self, message: str, *, n: int, element: object = None) -> None:
        super().__init__(message, n=n, element=None if element is None else str(element))
        self.n = n
        self.element = element


__all__ = [
    "CouplingIndexError",
    "CursorMapError",
    "InjectionConsistencyError",
    "SpreadingError",
    "TargetDomainError",
]
