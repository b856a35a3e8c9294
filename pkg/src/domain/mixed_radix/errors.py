"""Variable-base codec errors."""

from __future__ import annotations

from ..errors import LabConfigError, LabInvariantError


class RadixRangeError(LabConfigError):
    """Raised when an integer or index falls outside what a base can encode."""

    def __init__(self, message: str, *, value: int | None = None, bound: int | None = None) -> None:
        super().__init__(message, value=value, bound=bound)
        self.value = value
        self.bound = bound


class DigitRangeError(LabInvariantError):
    """Raised when a digit violates its radix."""

    def __init__(self, message: str, *, position: int, digit: int, radix: int) -> None:
        super().__init__(message, position=position, digit=digit, radix=radix)
        self.position = position
        self.digit = digit
        self.radix = radix


class CarrySaturationError(LabInvariantError):
    """Raised when every digit above the probed index sits at its maximum."""

    def __init__(self, message: str, *, k: int) -> None:
        super().__init__(message, k=k)
        self.k = k


__all__ = ["CarrySaturationError", "DigitRangeError", "RadixRangeError"]
