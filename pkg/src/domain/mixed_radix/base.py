"""Mixed-radix bases, digit vectors and the decompose/recompose codec."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from operator import mul
from typing import Sequence

from .errors import DigitRangeError, RadixRangeError


@dataclass(frozen=True, slots=True)
class MixedRadixBase:
    """Radices (b_0, ..., b_M), least significant first.

    When ``last_unbounded`` is set the final radix is kept for bookkeeping but
    digit M may take any nonnegative value.
    """

    radices: tuple[int, ...]
    last_unbounded: bool = False
    weights: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        radices = tuple(int(b) for b in self.radices)
        if not radices:
            raise RadixRangeError("mixed-radix base must contain at least one radix")
        for position, radix in enumerate(radices):
            if radix < 2:
                raise RadixRangeError(
                    f"radix at position {position} must be >= 2", value=radix, bound=2
                )
        object.__setattr__(self, "radices", radices)
        # weights[i] = b_0 * ... * b_{i-1}; weights[M + 1] is the full product.
        object.__setattr__(self, "weights", (1, *accumulate(radices, mul)))

    @classmethod
    def of(cls, radices: Sequence[int], *, last_unbounded: bool = False) -> MixedRadixBase:
        return cls(tuple(radices), last_unbounded=last_unbounded)

    @property
    def top(self) -> int:
        """Index M of the most significant digit."""
        return len(self.radices) - 1

    @property
    def capacity(self) -> int | None:
        """Number of encodable integers, or ``None`` when the last digit is unbounded."""
        return None if self.last_unbounded else self.weights[-1]

    def weight(self, i: int) -> int:
        return self.weights[i]

    def digit_is_maximal(self, position: int, digit: int) -> bool:
        if position == self.top and self.last_unbounded:
            return False
        return digit == self.radices[position] - 1

    def __len__(self) -> int:
        return len(self.radices)


@dataclass(frozen=True, slots=True)
class DigitVector:
    digits: tuple[int, ...]
    base: MixedRadixBase

    def __post_init__(self) -> None:
        digits = tuple(int(x) for x in self.digits)
        if len(digits) != len(self.base):
            raise DigitRangeError(
                "digit vector length must match the base",
                position=len(digits),
                digit=-1,
                radix=len(self.base),
            )
        for position, (digit, radix) in enumerate(zip(digits, self.base.radices)):
            unbounded = position == self.base.top and self.base.last_unbounded
            if digit < 0 or (not unbounded and digit >= radix):
                raise DigitRangeError(
                    f"digit {digit} at position {position} outside radix {radix}",
                    position=position,
                    digit=digit,
                    radix=radix,
                )
        object.__setattr__(self, "digits", digits)

    def __getitem__(self, position: int) -> int:
        return self.digits[position]

    def __len__(self) -> int:
        return len(self.digits)

    def as_list(self) -> list[int]:
        return list(self.digits)


def check_in_range(x: int, base: MixedRadixBase) -> None:
    if x < 0:
        raise RadixRangeError(
            "mixed-radix codecs only encode nonnegative integers", value=x, bound=0
        )
    capacity = base.capacity
    if capacity is not None and x >= capacity:
        raise RadixRangeError(
            f"{x} does not fit in base {base.radices}", value=x, bound=capacity
        )


def decompose(x: int, base: MixedRadixBase) -> DigitVector:
    """Iterated Euclidean division by b_0, b_1, ...; the remainder lands in digit M."""
    check_in_range(x, base)
    digits: list[int] = []
    rest = x
    for radix in base.radices[:-1]:
        rest, digit = divmod(rest, radix)
        digits.append(digit)
    digits.append(rest)
    return DigitVector(tuple(digits), base)


def recompose(vector: DigitVector) -> int:
    weights = vector.base.weights
    return sum(digit * weights[i] for i, digit in enumerate(vector.digits))


def digits_of(x: int | DigitVector, base: MixedRadixBase) -> DigitVector:
    if isinstance(x, DigitVector):
        if x.base != base:
            raise RadixRangeError("digit vector was built over a different base")
        return x
    return decompose(x, base)


__all__ = [
    "DigitVector",
    "MixedRadixBase",
    "check_in_range",
    "decompose",
    "digits_of",
    "recompose",
]
