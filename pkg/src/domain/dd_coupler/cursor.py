"""The cursor map u, its left inverse chi and the target blocks B_i(P, t) = chi^-1(B'_i)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..z_coupler import block_intervals
from .errors import CursorMapError

Interval = tuple[int, int]


@dataclass(frozen=True)
class CursorLayout:
    """Spreads Q_n blocks of kappa^n source cursors over [0, D_n - 1], D_n = Q_n kappa^n + R_n.

    The last block doubles its first R_n steps, so exactly R_n cursors are
    skipped by u and each skipped cursor is glued to its predecessor by chi.
    """

    width: int
    Q: int
    R: int
    _chi: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _split: dict[int, tuple[int, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.Q < 1 or not 0 <= self.R < self.width:
            raise CursorMapError("layout needs Q >= 1 and 0 <= R < kappa^n", v=self.R)
        split = {self.u(P, t): (P, t) for P in range(self.Q) for t in range(self.width)}
        chi: list[int] = []
        for v in range(self.D):
            if v in split:
                P, t = split[v]
                chi.append(P * self.width + t)
            else:
                chi.append(chi[-1] if chi else 0)
        object.__setattr__(self, "_split", split)
        object.__setattr__(self, "_chi", tuple(chi))

    @property
    def D(self) -> int:
        return self.Q * self.width + self.R

    def u(self, P: int, t: int) -> int:
        if not 0 <= P < self.Q:
            raise CursorMapError(f"block {P} outside [0, {self.Q - 1}]", v=P)
        if not 0 <= t < self.width:
            raise CursorMapError(f"cursor {t} outside [0, {self.width - 1}]", v=t)
        offset = P * self.width
        if P < self.Q - 1:
            return offset + t
        if t < self.R:
            return offset + 2 * t
        return offset + self.R + t

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self._split))

    def in_image(self, v: int) -> bool:
        return v in self._split

    def split(self, v: int) -> tuple[int, int]:
        """(P, t) with u(P, t) = v."""
        try:
            return self._split[v]
        except KeyError:
            raise CursorMapError(f"cursor {v} is not in the image of u", v=v) from None

    def chi(self, v: int) -> int:
        if not 0 <= v < self.D:
            raise CursorMapError(f"cursor {v} outside [0, {self.D - 1}]", v=v)
        return self._chi[v]

    def ideal_split(self, v: int) -> tuple[int, int]:
        """(P, t) with chi(v) = P kappa^n + t."""
        return divmod(self.chi(v), self.width)

    def preimage(self, interval: Interval) -> Interval:
        """chi^-1 of an interval of [0, Q kappa^n - 1]; chi is nondecreasing."""
        lo, hi = interval
        members = [v for v, y in enumerate(self._chi) if lo <= y <= hi]
        if not members:
            raise CursorMapError(f"interval {interval} misses the range of chi", v=lo)
        return members[0], members[-1]

    def fiber_sizes(self) -> Counter[int]:
        return Counter(self._chi)

    def consecutive_gaps(self) -> int:
        """Skipped cursors whose predecessor is skipped too; zero for every layout u builds."""
        skipped = [v for v in range(self.D) if v not in self._split]
        gaps = set(skipped)
        return sum(1 for v in skipped if v == 0 or v - 1 in gaps)


def ideal_block(i: int, P: int, t: int, *, n: int, kappa: int, p: int, Q: int) -> Interval:
    """B'_i(P, t) inside [0, Q kappa^n - 1]."""
    width = kappa**n
    if i >= p:
        return 0, Q * width - 1
    if i <= n:
        lo, hi = block_intervals(t, n, kappa).block(i)
        return P * width + lo, P * width + hi
    if P + 1 >= kappa ** (i - n):
        return (P + 1) * width - kappa**i, (P + 1) * width - 1
    return 0, kappa**i - 1


@dataclass(frozen=True, slots=True)
class TargetBlocks:
    """Blocks B_0(P, t) < ... < B_p(P, t) = [0, D_n - 1] of target cursors."""

    P: int
    t: int
    kappa: int
    intervals: tuple[Interval, ...]

    @property
    def p(self) -> int:
        return len(self.intervals) - 1

    def block(self, i: int) -> Interval:
        return self.intervals[i]

    def size(self, i: int) -> int:
        lo, hi = self.intervals[i]
        return hi - lo + 1

    def shell(self, i: int) -> list[int]:
        """Sites of B_i minus B_(i-1) in increasing order; all of B_0 for i = 0."""
        lo, hi = self.intervals[i]
        if i == 0:
            return list(range(lo, hi + 1))
        inner_lo, inner_hi = self.intervals[i - 1]
        return [*range(lo, inner_lo), *range(inner_hi + 1, hi + 1)]

    def nested(self) -> bool:
        return all(
            lo <= inner_lo and inner_hi <= hi
            for (inner_lo, inner_hi), (lo, hi) in zip(self.intervals, self.intervals[1:])
        )

    def sizes_hold(self) -> bool:
        """kappa^i <= |B_i| <= 2 kappa^i below the top block."""
        return all(self.kappa**i <= self.size(i) <= 2 * self.kappa**i for i in range(self.p))

    def contains(self, v: int) -> bool:
        return all(lo <= v <= hi for lo, hi in self.intervals)


def target_blocks(
    layout: CursorLayout, P: int, t: int, *, n: int, kappa: int, p: int
) -> TargetBlocks:
    intervals = tuple(
        layout.preimage(ideal_block(i, P, t, n=n, kappa=kappa, p=p, Q=layout.Q))
        for i in range(p + 1)
    )
    return TargetBlocks(P, t, kappa, intervals)


__all__ = ["CursorLayout", "TargetBlocks", "ideal_block", "target_blocks"]
