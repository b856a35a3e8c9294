"""Profile evaluation, class-membership checks and (k_m, l_m) sequence selection."""

from __future__ import annotations

import logging
import math
from bisect import bisect_right
from fractions import Fraction
from typing import Sequence

from ...models.profiles import ProfileSequences, ProfileSpec
from .errors import ProfileError

logger = logging.getLogger(__name__)

TOWER_EXPONENT_CAP = 200_000
GREEDY_STEP_CAP = 400
Number = int | Fraction | float


def log_of(x: Number) -> float:
    """Natural logarithm that stays finite for huge integers and rationals."""
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def _tabulated(spec: ProfileSpec, x: Fraction) -> Fraction:
    table = spec.table or ()
    xs = [p for p, _ in table]
    i = bisect_right(xs, x) - 1
    if i < 0:
        return table[0][1]
    if i >= len(table) - 1:
        i = len(table) - 2
    (x0, y0), (x1, y1) = table[i], table[i + 1]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def log_rho(spec: ProfileSpec, x: Number) -> float:
    """ln rho(x) for x >= 1."""
    if x < 1:
        x = 1
    if spec.family == "identity":
        return log_of(x)
    if spec.family == "power":
        return log_of(x) / float(1 + (spec.alpha or 0))
    if spec.family == "iterated_log":
        value = 1.0 + log_of(x)
        for _ in range((spec.r or 1) - 1):
            value = 1.0 + math.log(value)
        return math.log(value)
    return log_of(_tabulated(spec, Fraction(x)))


def evaluate_rho(spec: ProfileSpec, x: Number) -> Number:
    """rho(x), exact for the identity and tabulated families and a float otherwise."""
    if x < 1:
        x = 1
    if spec.family == "identity":
        return x
    if spec.family == "tabulated":
        return _tabulated(spec, Fraction(x))
    return math.exp(log_rho(spec, x))


def f_of(spec: ProfileSpec, x: Number) -> Number:
    """f(x) = x / rho(x)."""
    rho = evaluate_rho(spec, x)
    if isinstance(rho, float):
        return math.exp(log_of(x) - log_rho(spec, x))
    return Fraction(x) / rho


def sample_grid(upper: int = 10**6, points: int = 120) -> list[Fraction]:
    step = math.log(upper) / (points - 1)
    grid = sorted({Fraction(round(math.exp(step * i) * 64), 64) for i in range(points)})
    return [x for x in grid if x >= 1]


def in_class(spec: ProfileSpec, grid: Sequence[Number] | None = None) -> bool:
    """rho and x / rho(x) are nondecreasing on the grid (relative tolerance for floats)."""
    grid = list(grid or sample_grid())
    previous_log, previous_ratio = -math.inf, -math.inf
    for x in grid:
        current = log_rho(spec, x)
        ratio = log_of(x) - current
        tolerance = 1e-12 * max(1.0, abs(current), abs(ratio))
        if current < previous_log - tolerance or ratio < previous_ratio - tolerance:
            return False
        previous_log, previous_ratio = current, ratio
    return True


def _ceil_root(n: int, degree: int) -> int:
    if n < 2 or degree == 1:
        return n
    r = 1 << -(-n.bit_length() // degree)
    while True:
        s = ((degree - 1) * r + n // r ** (degree - 1)) // degree
        if s >= r:
            break
        r = s
    return r if r**degree == n else r + 1


def _tower(base: int, exponent: int, height: int, profile: str) -> int:
    value = exponent
    for _ in range(height):
        if value > TOWER_EXPONENT_CAP:
            raise ProfileError(
                f"tower exponent {value} exceeds {TOWER_EXPONENT_CAP}", profile=profile
            )
        value = base**value
    return value


def build_sequences(spec: ProfileSpec, kappa: int, lam: int, depth: int) -> ProfileSequences:
    """Choose k_0..k_M and l_0..l_M for ``spec``.

    Closed forms: power gives k_m = kappa^m, l_m = ceil(kappa^(alpha m)); the
    iterated logarithm gives k_m = kappa^m and l_m an r-fold kappa tower over
    kappa^m; the identity gives the lamplighter (every k_m infinite for m >= 1).
    Tabulated profiles take k_m = kappa^m and l_m the smallest power of ``lam``
    at least l_{m-1} with f(k_m l_m) <= l_m.
    """
    if kappa < 2 or lam < 2 or depth < 0:
        raise ProfileError("need kappa, lambda >= 2 and depth >= 0", profile=spec.label)
    if not in_class(spec):
        raise ProfileError(
            "profile leaves the admissible class on the sample grid", profile=spec.label
        )

    k, l = [0], [1]
    if spec.family != "identity":
        for m in range(1, depth + 1):
            k_m = kappa**m
            if spec.family == "power":
                alpha = spec.alpha or Fraction(1)
                l_m = _ceil_root(kappa ** (alpha.numerator * m), alpha.denominator)
            elif spec.family == "iterated_log":
                l_m = _tower(kappa, k_m, spec.r or 1, spec.label)
            else:
                l_m = _greedy_level(spec, k_m, l[-1], lam)
            k.append(k_m)
            l.append(max(l_m, l[-1]))
    logger.info("profile sequences profile=%s kappa=%s depth=%s", spec.label, kappa, len(k) - 1)
    return ProfileSequences(profile=spec, kappa=kappa, lam=lam, k=k, l=l)


def _greedy_level(spec: ProfileSpec, k_m: int, previous: int, lam: int) -> int:
    l_m = previous
    for _ in range(GREEDY_STEP_CAP):
        if f_of(spec, k_m * l_m) <= l_m:
            return l_m
        l_m *= lam
    raise ProfileError(
        f"no power of {lam} satisfies f(k l) <= l at k = {k_m}", profile=spec.label, k=k_m
    )


__all__ = [
    "build_sequences",
    "evaluate_rho",
    "f_of",
    "in_class",
    "log_of",
    "log_rho",
    "sample_grid",
]
