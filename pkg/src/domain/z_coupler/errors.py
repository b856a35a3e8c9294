"""Errors raised by the Z encoder and its audits."""

from __future__ import annotations

from ..errors import LabConfigError


class ZDomainError(LabConfigError):
    """Raised when an element or integer lies outside the encoder's domain."""

    def __init__(self, message: str, *, n: int, value: object = None) -> None:
        super().__init__(message, n=n, value=None if value is None else str(value))
        self.n = n
        self.value = value


class InteriorError(LabConfigError):
    """Raised when a gap is requested at a cursor on the edge of [0, kappa^n - 1]."""

    def __init__(self, message: str, *, t: int, n: int) -> None:
        super().__init__(message, t=t, n=n)
        self.t = t
        self.n = n


class GaugeError(LabConfigError):
    """Raised for gauges that cannot be composed or evaluated symbolically."""

    def __init__(self, message: str, *, outer: str | None = None, inner: str | None = None) -> None:
        super().__init__(message, outer=outer, inner=inner)
        self.outer = outer
        self.inner = inner


__all__ = ["GaugeError", "InteriorError", "ZDomainError"]
