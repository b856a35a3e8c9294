"""Growth constants of the Folner family and isoperimetric witnesses."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ...models.folner import GrowthBoundsReport, GrowthRow, IsoperimetricPoint
from .index import FolnerFamily, FolnerIndex


def growth_rows(family: FolnerFamily, n_max: int) -> list[GrowthRow]:
    """Every index with n <= n_max in chain order, with successor ratios and 2/n boundary."""
    rows: list[GrowthRow] = []
    previous: int | None = None
    for idx in family.walk():
        if idx.n > n_max:
            break
        size = family.cardinality(idx)
        rows.append(
            GrowthRow(
                n=idx.n,
                i=idx.i,
                j=idx.j,
                cardinality=size,
                ln_cardinality=family.ln_cardinality(idx),
                ratio=None if previous is None else size / previous,
                boundary_ratio=2 / idx.n if idx.n >= 2 else 1.0,
            )
        )
        previous = size
    return rows


def _derived_log(family: FolnerFamily, n: int) -> float:
    shape = family.shape
    return sum(
        (n - shape.k[m]) * math.log(shape.prime_orders[m])
        for m in range(1, family.top_level(n) + 1)
    )


def growth_bounds_report(
    family: FolnerFamily, n_max: int, kappa_exponents: int | None = None
) -> GrowthBoundsReport:
    """Smallest C1, C2 and the sandwich C3, C4 over the sweep.

    ln prod_{m<=l(n-1)} |Gamma'_m|^(n-k_m) <= C1 n l_{l(n-1)},
    ln |F_{n,i,j}| <= C2 n l_{l(n-1)} and
    C3 kappa^(e-1) l_{L(e)} <= ln |F_{kappa^e}| <= C4 kappa^e l_{L(e)}.
    """
    shape = family.shape
    rows = growth_rows(family, n_max)
    c1 = max(
        _derived_log(family, n) / (n * shape.l[family.top_level(n)]) for n in range(1, n_max + 1)
    )
    c2 = max(row.ln_cardinality / (row.n * shape.l[family.top_level(row.n)]) for row in rows)

    kappa = shape.kappa
    if kappa_exponents is None:
        kappa_exponents = max(1, int(math.log(max(n_max, kappa), kappa) + 1e-9))
    lower: list[float] = []
    upper: list[float] = []
    for e in range(1, kappa_exponents + 1):
        size = kappa**e
        ln_f = family.ln_cardinality(family.last(size))
        l_top = shape.l[family.top_level(size)]
        lower.append(ln_f / (kappa ** (e - 1) * l_top))
        upper.append(ln_f / (size * l_top))
    return GrowthBoundsReport(
        n_max=n_max,
        kappa_exponents=kappa_exponents,
        c1=c1,
        c2=c2,
        c3=min(lower),
        c4=max(upper),
        chain_ratios_ok=family.chain_ratios_ok(n_max),
        rows=rows,
    )


def isoperimetric_estimate(
    family: FolnerFamily, n_max: int, *, every_stage: bool = False
) -> list[IsoperimetricPoint]:
    """Points (|F|, n / 2): each Folner set witnesses I(|F|) >= n / 2 for n >= 2."""
    indices: list[FolnerIndex] = []
    for n in range(2, n_max + 1):
        if every_stage:
            idx = family.first(n)
            while idx.n == n:
                indices.append(idx)
                idx = family.successor(idx)
        else:
            indices.append(family.last(n))
    return [
        IsoperimetricPoint(
            n=idx.n,
            i=idx.i,
            j=idx.j,
            cardinality=family.cardinality(idx),
            ratio=idx.n / 2,
            ln_cardinality=family.ln_cardinality(idx),
        )
        for idx in indices
    ]


def cursor_only_estimate(n_max: int) -> list[IsoperimetricPoint]:
    """Intervals [0, n - 1] of Z: |F| = n and |F| / |boundary F| = n / 2."""
    return [
        IsoperimetricPoint(n=n, cardinality=n, ratio=n / 2, ln_cardinality=math.log(n))
        for n in range(2, n_max + 1)
    ]


def trend_slope(points: Sequence[IsoperimetricPoint], *, log_of_log: bool = True) -> float | None:
    """Least-squares slope of ln(n / 2) against ln ln |F| (or ln |F|)."""
    usable = [p for p in points if p.ln_cardinality > 0 and p.ratio > 0]
    if len(usable) < 2:
        return None
    xs = np.array([math.log(p.ln_cardinality) if log_of_log else p.ln_cardinality for p in usable])
    ys = np.array([math.log(p.ratio) for p in usable])
    if np.ptp(xs) == 0:
        return None
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


__all__ = [
    "cursor_only_estimate",
    "growth_bounds_report",
    "growth_rows",
    "isoperimetric_estimate",
    "trend_slope",
]
