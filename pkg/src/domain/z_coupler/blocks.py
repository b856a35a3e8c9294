"""Nested base-kappa blocks around a cursor and the carry position of t + 1."""

from __future__ import annotations

from dataclasses import dataclass

from ..mixed_radix import MixedRadixBase, carry_index, decompose
from .errors import ZDomainError

Interval = tuple[int, int]


def cursor_base(kappa: int, n: int) -> MixedRadixBase:
    return MixedRadixBase.of([kappa] * n)


def cursor_digits(t: int, n: int, kappa: int) -> tuple[int, ...]:
    """Base-kappa digits of t, least significant first."""
    if not 0 <= t < kappa**n:
        raise ZDomainError(f"cursor must lie in [0, {kappa**n - 1}]", n=n, value=t)
    return decompose(t, cursor_base(kappa, n)).digits


@dataclass(frozen=True, slots=True)
class BlockDecompositionZ:
    """Blocks B_i = [sum_{j>=i} t_j kappa^j, same + kappa^i - 1] for i = 0..n."""

    t: int
    n: int
    kappa: int
    intervals: tuple[Interval, ...]

    def block(self, i: int) -> Interval:
        return self.intervals[i]

    def shell(self, i: int) -> list[int]:
        """Sites of B_i minus B_{i-1} in increasing order (the single site t for i = 0)."""
        lo, hi = self.intervals[i]
        if i == 0:
            return [lo]
        inner_lo, inner_hi = self.intervals[i - 1]
        return [*range(lo, inner_lo), *range(inner_hi + 1, hi + 1)]

    def nested(self) -> bool:
        return all(
            lo <= inner_lo and inner_hi <= hi
            for (inner_lo, inner_hi), (lo, hi) in zip(self.intervals, self.intervals[1:])
        )

    def diameters_hold(self) -> bool:
        return all(hi - lo == self.kappa**i - 1 for i, (lo, hi) in enumerate(self.intervals))


def block_intervals(t: int, n: int, kappa: int) -> BlockDecompositionZ:
    digits = cursor_digits(t, n, kappa)
    intervals: list[Interval] = []
    for i in range(n + 1):
        lo = sum(d * kappa**j for j, d in enumerate(digits) if j >= i)
        intervals.append((lo, lo + kappa**i - 1))
    return BlockDecompositionZ(t, n, kappa, tuple(intervals))


def carry_position(t: int, n: int, kappa: int) -> int:
    """i0(t) = min{i : t_i < kappa - 1}, the digit absorbing the carry of t + 1.

    Raises:
        CarrySaturationError: t = kappa^n - 1.
    """
    cursor_digits(t, n, kappa)
    return carry_index(t, -1, cursor_base(kappa, n))


__all__ = [
    "BlockDecompositionZ",
    "block_intervals",
    "carry_position",
    "cursor_base",
    "cursor_digits",
]
