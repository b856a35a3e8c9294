"""Exhaustive and counting audits of the Z encoder."""

from __future__ import annotations

import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from ...models.coupling import AuditRow, CouplingAudit, GaugeSpec, ZCouplingReport
from ...models.profiles import SummabilityReport
from ..delta_core import CURSOR_FORWARD, DeltaElement
from ..folner_atlas import EnumerationBudgetError
from ..profile_forge import summability
from .blocks import carry_position
from .encoder import ZEncoder
from .gauges import gauge_value, log_gauge_at_log

logger = logging.getLogger(__name__)

MAX_EXP = 700.0


def carry_histogram(kappa: int, n: int, size: int) -> dict[int, int]:
    """#{(f, t) in G_n : i0(t) = m} = (|G_n| / kappa^n) (kappa - 1) kappa^(n - m - 1)."""
    per_cursor = size // kappa**n
    return {m: per_cursor * (kappa - 1) * kappa ** (n - m - 1) for m in range(n)}


def saturated_count(kappa: int, n: int, size: int) -> int:
    """Elements whose cursor sits at kappa^n - 1 and has no carry position."""
    return size // kappa**n


def observed_carry_histogram(
    elements: Iterable[DeltaElement], kappa: int, n: int
) -> tuple[dict[int, int], int]:
    counts: Counter[int] = Counter()
    saturated = 0
    last = kappa**n - 1
    for x in elements:
        if x.t == last:
            saturated += 1
        else:
            counts[carry_position(x.t, n, kappa)] += 1
    return {m: counts.get(m, 0) for m in range(n)}, saturated


def audit_elements(
    encoder: ZEncoder, budget: int, *, sample: int | None = None, seed: int = 0
) -> tuple[list[DeltaElement], bool]:
    """All of G_n within ``budget``, otherwise a seeded sample when one is requested."""
    if encoder.size <= budget:
        return list(encoder.template.elements()), False
    if sample is None:
        raise EnumerationBudgetError(
            f"|G_{encoder.n}| = {encoder.size} exceeds the enumeration budget",
            cardinality=encoder.size,
            budget=budget,
        )
    rng = np.random.default_rng(seed)
    return [encoder.template.random_element(rng) for _ in range(sample)], True


def gap_histogram(
    encoder: ZEncoder, label: str, elements: Iterable[DeltaElement]
) -> tuple[Counter[int], int, int]:
    """Counts of |encode(x) - encode(x s)| over interior x, with the number of bound breaks.

    Lamp gaps must not exceed q; cursor gaps stay strictly below their bound.
    """
    counts: Counter[int] = Counter()
    exceptions = interior = 0
    for x in elements:
        if not encoder.is_interior(x):
            continue
        interior += 1
        gap = encoder.neighbor_gap(x, label)
        counts[gap] += 1
        bound = encoder.gap_bound(x, label)
        if gap > bound or (label == CURSOR_FORWARD and gap >= bound):
            exceptions += 1
    return counts, interior, exceptions


def integrability_sum(
    histogram: Mapping[int, int], population: int, r_max: int, phi: GaugeSpec
) -> tuple[int | Fraction | float, list[AuditRow]]:
    """sum_{r <= R} phi(r) #{x : gap(x, s) = r} / |G_n| with its running rows."""
    total: int | Fraction | float = Fraction(0)
    rows: list[AuditRow] = []
    for r in sorted(histogram):
        if r > r_max:
            break
        fraction = Fraction(histogram[r], population)
        weight = gauge_value(phi, r)
        total += weight * fraction
        rows.append(
            AuditRow(
                key=r,
                count=histogram[r],
                fraction=fraction,
                weight=float(weight),
                partial_sum=float(total),
            )
        )
    return total, rows


def cursor_majorant(phi: GaugeSpec, kappa: int, q: int, n: int) -> float:
    """Counting bound of the cursor sum: sum_m phi(kappa^(m+1) q^(kappa^(m+1))) P(i0 = m)."""
    total = 0.0
    for m in range(n):
        ln_bound = (m + 1) * math.log(kappa) + kappa ** (m + 1) * math.log(q)
        ln_share = math.log(kappa - 1) - (m + 1) * math.log(kappa)
        ln_term = log_gauge_at_log(phi, ln_bound) + ln_share
        if ln_term > MAX_EXP:
            return math.inf
        total += math.exp(ln_term)
    return total


def majorant_series(phi: GaugeSpec, kappa: int, q: int, terms: int) -> SummabilityReport:
    """phi(kappa^(m+1) q^(kappa^(m+1))) kappa^-m for m < terms, with a summability verdict."""
    log_terms = [
        log_gauge_at_log(phi, (m + 1) * math.log(kappa) + kappa ** (m + 1) * math.log(q))
        - m * math.log(kappa)
        for m in range(terms)
    ]
    return summability(f"cursor majorant {phi.label}", log_terms)


def gap_audit(
    encoder: ZEncoder,
    label: str,
    elements: Sequence[DeltaElement],
    phi: GaugeSpec,
    r_max: int,
    *,
    sampled: bool = False,
) -> CouplingAudit:
    histogram, interior, exceptions = gap_histogram(encoder, label, elements)
    population = encoder.size if not sampled else len(elements)
    total, rows = integrability_sum(histogram, population, r_max, phi)
    logger.info(
        "zcoupling gaps n=%s generator=%s interior=%s max=%s exceptions=%s",
        encoder.n,
        label,
        interior,
        max(histogram, default=None),
        exceptions,
    )
    return CouplingAudit(
        generator=label,
        n=encoder.n,
        population=population,
        interior=interior,
        sampled=sampled,
        max_gap=max(histogram, default=None),
        exceptions=exceptions,
        rows=rows,
        total=float(total),
        verdict="violated" if exceptions else "ok",
    )


def window_stability_exceptions(
    encoder: ZEncoder, elements: Iterable[DeltaElement], labels: Sequence[str]
) -> int:
    """Pairs (x, s) changing a digit they must leave alone.

    Lamps keep every cursor digit and every window digit above nu_0; the cursor
    keeps every digit above the window i0 + 1.
    """
    bad = 0
    for x in elements:
        if not encoder.is_interior(x):
            continue
        before = encoder.digits(x).digits
        for label in labels:
            after = encoder.digits(encoder.delta.apply_generator(x, label)).digits
            if label == CURSOR_FORWARD:
                keep = 2 * (carry_position(x.t, encoder.n, encoder.kappa) + 1) + 1
                changed = before[keep:] != after[keep:]
            else:
                changed = before[1:-1] != after[1:-1]
            bad += changed
    return bad


def verify_encoder(
    encoder: ZEncoder,
    *,
    budget: int,
    sample: int | None = None,
    seed: int = 0,
    phi: GaugeSpec | None = None,
    r_max: int | None = None,
) -> ZCouplingReport:
    """Bijectivity, carry counts, window stability and gap laws on G_n."""
    elements, sampled = audit_elements(encoder, budget, sample=sample, seed=seed)
    codes: set[int] = set()
    failures = 0
    for x in elements:
        z = encoder.encode(x)
        codes.add(z)
        if encoder.decode(z) != x:
            failures += 1
    distinct = len(set(elements)) if sampled else len(elements)
    injective = len(codes) == distinct and failures == 0
    surjective = None if sampled else codes == set(range(encoder.size))

    kappa, n = encoder.kappa, encoder.n
    expected = carry_histogram(kappa, n, encoder.size)
    matches: bool | None = None
    if not sampled:
        observed, saturated = observed_carry_histogram(elements, kappa, n)
        matches = observed == expected and saturated == saturated_count(kappa, n, encoder.size)

    labels = (CURSOR_FORWARD, *encoder.delta.lamp_labels)
    phi = phi or GaugeSpec(kind="constant")
    r_max = encoder.size if r_max is None else r_max
    gaps = [gap_audit(encoder, s, elements, phi, r_max, sampled=sampled) for s in labels]
    report = ZCouplingReport(
        n=n,
        kappa=kappa,
        q=encoder.q,
        population=encoder.size,
        mu_size=encoder.mu_size,
        checked=len(elements),
        sampled=sampled,
        injective=injective,
        surjective=surjective,
        round_trip_failures=failures,
        carry_histogram=expected,
        saturated=saturated_count(kappa, n, encoder.size),
        histogram_matches=matches,
        stability_exceptions=window_stability_exceptions(encoder, elements, labels),
        gaps=gaps,
    )
    logger.info(
        "zcoupling verify n=%s checked=%s injective=%s surjective=%s ok=%s",
        n,
        len(elements),
        injective,
        surjective,
        report.ok,
    )
    return report


__all__ = [
    "audit_elements",
    "carry_histogram",
    "cursor_majorant",
    "gap_audit",
    "gap_histogram",
    "integrability_sum",
    "majorant_series",
    "observed_carry_histogram",
    "saturated_count",
    "verify_encoder",
    "window_stability_exceptions",
]
