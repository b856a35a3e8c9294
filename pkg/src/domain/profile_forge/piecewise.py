"""Exact piecewise-affine companions f_bar, rho_bar and rho_bij of a profile."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ...models.profiles import ProfileSequences
from .errors import ProfileError

DEFAULT_DELTA = Fraction(1, 4)
Point = tuple[Fraction, Fraction]


@dataclass(frozen=True, slots=True)
class PiecewiseAffine:
    """Continuous piecewise-affine map through ``points``, extended by ``tail_slope``.

    Abscissae increase strictly. Values left of the first point follow the
    first piece.
    """

    points: tuple[Point, ...]
    tail_slope: Fraction
    _xs: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.points:
            raise ProfileError("a piecewise-affine map needs at least one point")
        xs = tuple(x for x, _ in self.points)
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ProfileError("breakpoint abscissae must increase strictly")
        object.__setattr__(self, "_xs", xs)

    @classmethod
    def through(cls, points: Sequence[Point], tail_slope: Fraction) -> PiecewiseAffine:
        """Build from points, merging repeated abscissae (their values must agree)."""
        merged: list[Point] = []
        for x, y in points:
            x, y = Fraction(x), Fraction(y)
            if merged and merged[-1][0] == x:
                if merged[-1][1] != y:
                    raise ProfileError(f"conflicting values at breakpoint {x}")
                continue
            merged.append((x, y))
        return cls(tuple(merged), Fraction(tail_slope))

    def _slope(self, i: int) -> Fraction:
        if i >= len(self.points) - 1:
            return self.tail_slope
        (x0, y0), (x1, y1) = self.points[i], self.points[i + 1]
        return (y1 - y0) / (x1 - x0)

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        i = max(bisect_right(self._xs, x) - 1, 0)
        x0, y0 = self.points[i]
        return y0 + self._slope(i) * (x - x0)

    @property
    def strictly_increasing(self) -> bool:
        ys = [y for _, y in self.points]
        return all(b > a for a, b in zip(ys, ys[1:])) and self.tail_slope > 0

    def inverse(self, y: Fraction | int) -> Fraction:
        """Exact inverse; defined only for strictly increasing maps."""
        if not self.strictly_increasing:
            raise ProfileError("only strictly increasing maps are invertible")
        y = Fraction(y)
        ys = [value for _, value in self.points]
        i = max(bisect_right(ys, y) - 1, 0)
        x0, y0 = self.points[i]
        return x0 + (y - y0) / self._slope(i)


def f_bar_map(seq: ProfileSequences) -> PiecewiseAffine:
    """l_m on [k_m l_m, k_{m+1} l_m] and x / k_{m+1} on [k_{m+1} l_m, k_{m+1} l_{m+1}]."""
    points: list[Point] = [(Fraction(0), Fraction(seq.l[0]))]
    for m in range(len(seq.k) - 1):
        k_next, l_m, l_next = seq.k[m + 1], seq.l[m], seq.l[m + 1]
        points.append((Fraction(k_next * l_m), Fraction(l_m)))
        points.append((Fraction(k_next * l_next), Fraction(l_next)))
    return PiecewiseAffine.through(points, Fraction(0))


def rho_bar_map(seq: ProfileSequences) -> PiecewiseAffine:
    """x / f_bar(x): slope 1 / l_m on the rising pieces, plateau k_{m+1} in between."""
    points: list[Point] = [(Fraction(0), Fraction(0))]
    for m in range(len(seq.k) - 1):
        k_next, l_m, l_next = seq.k[m + 1], seq.l[m], seq.l[m + 1]
        points.append((Fraction(k_next * l_m), Fraction(k_next)))
        points.append((Fraction(k_next * l_next), Fraction(k_next)))
    return PiecewiseAffine.through(points, Fraction(1, seq.l[-1]))


def bar_f(seq: ProfileSequences, x: Fraction | int) -> Fraction:
    """f_bar(x), with arguments below 1 clamped to 1."""
    return f_bar_map(seq)(max(Fraction(x), Fraction(1)))


def bar_rho(seq: ProfileSequences, x: Fraction | int) -> Fraction:
    x = max(Fraction(x), Fraction(1))
    return x / f_bar_map(seq)(x)


def rho_bij_map(seq: ProfileSequences, delta: Fraction = DEFAULT_DELTA) -> PiecewiseAffine:
    """Strictly increasing companion of rho_bar.

    It equals rho_bar on [(k_m + delta) l_m, (k_{m+1} - delta) l_m] and is affine
    from ((k_{m+1} - delta) l_m, k_{m+1} - delta) to
    ((k_{m+1} + delta) l_{m+1}, k_{m+1} + delta) across each plateau.
    """
    delta = Fraction(delta)
    if not 0 < delta < Fraction(1, 2):
        raise ProfileError("corner parameter must satisfy 0 < delta < 1/2", delta=str(delta))
    points: list[Point] = [(Fraction(0), Fraction(0))]
    for m in range(len(seq.k) - 1):
        k_next, l_m, l_next = seq.k[m + 1], seq.l[m], seq.l[m + 1]
        points.append(((k_next - delta) * l_m, k_next - delta))
        points.append(((k_next + delta) * l_next, k_next + delta))
    return PiecewiseAffine.through(points, Fraction(1, seq.l[-1]))


def rho_bij(seq: ProfileSequences, x: Fraction | int, delta: Fraction = DEFAULT_DELTA) -> Fraction:
    return rho_bij_map(seq, delta)(x)


def rho_bij_inverse(
    seq: ProfileSequences, y: Fraction | int, delta: Fraction = DEFAULT_DELTA
) -> Fraction:
    return rho_bij_map(seq, delta).inverse(y)


def scaling_inequality_holds(seq: ProfileSequences, x: Fraction, c: Fraction) -> bool:
    """rho_bar(x) <= rho_bar(c x) <= c rho_bar(x) for x, c >= 1."""
    low = bar_rho(seq, x)
    return low <= bar_rho(seq, c * x) <= c * low


def contraction_inequality_holds(seq: ProfileSequences, x: Fraction, c: Fraction) -> bool:
    """c rho_bar(x) <= rho_bar(c x) for 0 < c < 1 and x >= 1 / c."""
    return c * bar_rho(seq, x) <= bar_rho(seq, c * x)


def inverse_doubling_holds(
    seq: ProfileSequences, x: Fraction, delta: Fraction = DEFAULT_DELTA
) -> bool:
    """rho_bar(x) = y >= 1 implies x <= rho_bij^-1(2 y)."""
    y = bar_rho(seq, x)
    return y < 1 or Fraction(x) <= rho_bij_inverse(seq, 2 * y, delta)


__all__ = [
    "DEFAULT_DELTA",
    "PiecewiseAffine",
    "bar_f",
    "bar_rho",
    "contraction_inequality_holds",
    "f_bar_map",
    "inverse_doubling_holds",
    "rho_bar_map",
    "rho_bij",
    "rho_bij_inverse",
    "rho_bij_map",
    "scaling_inequality_holds",
]
