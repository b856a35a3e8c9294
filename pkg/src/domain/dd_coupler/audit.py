"""Audits of the injection G_n -> H_n: structure, injectivity, density, distances and sums."""

from __future__ import annotations

import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Sequence

import numpy as np

from ...models.coupling import (
    AuditRow,
    AuditVerdict,
    CouplingAudit,
    CouplingHypotheses,
    DDCouplingReport,
    GaugeSpec,
    IntegrabilitySplit,
)
from ...models.profiles import ExponentFit
from ..delta_core import (
    CURSOR_BACKWARD,
    CURSOR_FORWARD,
    DeltaElement,
    distance_upper,
    level_bound,
)
from ..profile_forge import diagonal_series_of
from ..profile_forge.hypotheses import EPSILON_FLOOR, FIT_POINTS
from ..z_coupler import audit_elements, carry_position, gauge_value, log_gauge_at_log
from .coupler import DDCoupler, density_radius

logger = logging.getLogger(__name__)

GAUGE_FIT_TOP = 10**6
BLOCK_DISTANCE_FACTOR = 6


# -- structure ---------------------------------------------------------


def box_union_size(coupler: DDCoupler) -> int:
    """#{(t, theta, P) : E Q + P <= max mu}, counted without enumeration."""
    numbering = coupler.source_numbering
    Q, max_mu = numbering.Q, numbering.max_mu
    per_E = coupler.encoder.q**coupler.encoder.width
    rows = sum(max_mu // Q + (1 if P <= max_mu % Q else 0) for P in range(Q))
    return coupler.encoder.width * per_E * rows


def triple_map_bijective(coupler: DDCoupler, elements: Sequence[DeltaElement]) -> bool:
    """x -> (t, theta_tilde(x), P(x)) hits every point of the box union exactly once."""
    numbering = coupler.source_numbering
    image = {numbering.triple(x) for x in elements}
    if len(image) != len(elements):
        return False
    if not all(numbering.in_box_union(*triple) for triple in image):
        return False
    return len(image) == box_union_size(coupler)


def stability_exceptions(coupler: DDCoupler, elements: Sequence[DeltaElement]) -> int:
    """Lamp moves changing theta_tilde above digit 0 or changing (E, P)."""
    numbering = coupler.source_numbering
    encoder = coupler.encoder
    bad = 0
    for x in elements:
        if not encoder.is_interior(x):
            continue
        digits = numbering.digits(x).digits[1:]
        ep = numbering.extract_EP(x)
        for label in coupler.source.lamp_labels:
            y = coupler.source.apply_generator(x, label)
            bad += numbering.digits(y).digits[1:] != digits or numbering.extract_EP(y) != ep
    return bad


def e_sandwich_holds(coupler: DDCoupler) -> bool:
    """|F_{d,i,j-1}| / (D q^(kappa^n)) <= max E + 1 <= |K_n| / (D q^(kappa^n))."""
    index = coupler.index
    scale = index.D * coupler.encoder.q**index.width
    value = coupler.source_numbering.max_E + 1
    return Fraction(index.below, scale) <= value <= Fraction(index.target_size, scale)


def theta_sandwich_holds(coupler: DDCoupler) -> bool:
    """|F_{d,i,j-1}| / D <= max theta_tilde + 1 <= |K_n| / D."""
    index = coupler.index
    value = coupler.source_numbering.max_theta + 1
    return Fraction(index.below, index.D) <= value <= Fraction(index.target_size, index.D)


def chi_fibers_ok(coupler: DDCoupler) -> bool:
    index = coupler.index
    fibers = coupler.layout.fiber_sizes()
    onto = set(fibers) == set(range(index.Q * index.width))
    return onto and all(1 <= size <= 2 for size in fibers.values())


def frames_ok(coupler: DDCoupler) -> tuple[bool, bool]:
    """(blocks nested, sized and around u(P, t); b_0 ... b_p = q^D) over every frame."""
    index = coupler.index
    numbering = coupler.target_numbering
    full = numbering.q**index.D
    blocks_ok = products_ok = True
    for P in range(index.Q):
        for t in range(index.width):
            frame = numbering.frame(P, t)
            blocks = frame.blocks
            v = coupler.layout.u(P, t)
            blocks_ok &= blocks.nested() and blocks.sizes_hold() and blocks.contains(v)
            products_ok &= frame.product(index.p) == full
    return blocks_ok, products_ok


# -- distances ---------------------------------------------------------


def carry_start(coupler: DDCoupler, x: DeltaElement, label: str) -> int:
    """Digit above which the spread numbers of x and x s agree: 2 for lamps, i0 + 1 for moves."""
    if label not in (CURSOR_FORWARD, CURSOR_BACKWARD):
        return 2
    t = x.t if label == CURSOR_FORWARD else x.t - 1
    i0 = carry_position(t, coupler.n, coupler.index.kappa)
    return 2 if i0 == 0 else i0 + 1


def block_bound(coupler: DDCoupler, m: int) -> int:
    """6 kappa^m inside the cursor blocks, the level estimate on [0, D_n - 1] above them."""
    index = coupler.index
    if m <= index.p:
        return BLOCK_DISTANCE_FACTOR * index.kappa**m
    return level_bound(coupler.target, index.D, min(m - index.p, index.M))


def _l(coupler: DDCoupler, i: int) -> int:
    l_seq = coupler.target.params.l_seq
    return l_seq[max(0, min(i, len(l_seq) - 1))]


def log_majorant(coupler: DDCoupler, label: str, m: int) -> float:
    """ln of the counting majorant of |X^s_m|; -inf where the set must be empty."""
    index = coupler.index
    n, p, D, width = index.n, index.p, index.D, index.width
    ln_K = math.log(index.target_size)
    ln_q = math.log(coupler.encoder.q)
    ln_kappa = math.log(index.kappa)
    if label in (CURSOR_FORWARD, CURSOR_BACKWARD):
        if m <= n + 1:
            return ln_K - m * ln_kappa
        head = ln_K - n * ln_kappa + 2 * width * ln_q
        if m <= p:
            return head - index.kappa ** (m - 1) * ln_q
    else:
        if m <= 2:
            return -math.inf
        head = ln_K
        if m <= p:
            return head - index.kappa ** (m - 1) * ln_q
    tail = head - D * ln_q
    if m == p + 1:
        return tail
    return tail - _l(coupler, m - 1 - p)


def row_weight(coupler: DDCoupler, phi: GaugeSpec, m: int) -> float:
    """phi(kappa^m) up to p_n, phi(kappa^p_n) at p_n + 1, phi(D_n l_(m - p_n)) beyond."""
    index = coupler.index
    if m <= index.p:
        r = index.kappa**m
    elif m == index.p + 1:
        r = index.kappa**index.p
    else:
        r = index.D * _l(coupler, m - index.p)
    return float(gauge_value(phi, r))


def _verdict(exceptions: int) -> AuditVerdict:
    return "violated" if exceptions else "ok"


def dd_distance_audit(
    coupler: DDCoupler,
    label: str,
    elements: Sequence[DeltaElement],
    phi: GaugeSpec,
    *,
    sampled: bool = False,
) -> CouplingAudit:
    """Histogram of m = j_{P,t}(min theta, k) over interior x with certified distance checks."""
    encoder = coupler.encoder
    numbering = coupler.target_numbering
    counts: Counter[int] = Counter()
    interior = exceptions = 0
    largest = 0
    for x in elements:
        if not encoder.is_interior(x):
            continue
        interior += 1
        y = coupler.source.apply_generator(x, label)
        _, P = coupler.source_numbering.extract_EP(x)
        frame = numbering.frame(P, x.t)
        zx = coupler.spreading(coupler.source_numbering.theta_tilde(x))
        zy = coupler.spreading(coupler.source_numbering.theta_tilde(y))
        k = carry_start(coupler, x, label)
        m = frame.carry(min(zx, zy), k)
        counts[m] += 1
        ix, iy = coupler.inject(x), coupler.inject(y)
        mode = "interval" if ix.fprime == iy.fprime else "level"
        certified = distance_upper(coupler.target, ix, iy, mode)
        largest = max(largest, certified)
        if certified > block_bound(coupler, m) or not frame.locality_holds(zx, zy, k):
            exceptions += 1

    population = len(elements) if sampled else encoder.size
    rows: list[AuditRow] = []
    running = 0.0
    for m in sorted(counts):
        fraction = Fraction(counts[m], population)
        weight = row_weight(coupler, phi, m)
        running += weight * float(fraction)
        majorant = math.exp(log_majorant(coupler, label, m))
        rows.append(
            AuditRow(
                key=m,
                count=counts[m],
                fraction=fraction,
                bound=block_bound(coupler, m),
                weight=weight,
                partial_sum=running,
                majorant=majorant,
                fitted_constant=counts[m] / majorant if majorant > 0 else None,
            )
        )
    logger.info(
        "ddcoupling distances n=%s generator=%s interior=%s largest=%s exceptions=%s",
        coupler.n,
        label,
        interior,
        largest,
        exceptions,
    )
    return CouplingAudit(
        generator=label,
        n=coupler.n,
        key_name="m",
        population=population,
        interior=interior,
        sampled=sampled,
        max_gap=largest if interior else None,
        exceptions=exceptions,
        rows=rows,
        total=running,
        verdict=_verdict(exceptions),
    )


def dd_integrability_sum(
    coupler: DDCoupler, audit: CouplingAudit, *, m_max: int | None = None
) -> IntegrabilitySplit:
    p = coupler.index.p
    low = middle = high = 0.0
    for row in audit.rows:
        if m_max is not None and row.key > m_max:
            break
        term = row.weight * float(row.fraction)
        if row.key <= p:
            low += term
        elif row.key == p + 1:
            middle += term
        else:
            high += term
    return IntegrabilitySplit(generator=audit.generator, low=low, middle=middle, high=high)


# -- hypotheses --------------------------------------------------------


def gauge_exponent_fit(
    phi: GaugeSpec, top: int = GAUGE_FIT_TOP, points: int = FIT_POINTS
) -> ExponentFit:
    """Least-squares slope of ln phi(x) against ln x on a geometric grid."""
    log_x = np.log(np.geomspace(2, top, points))
    log_phi = np.array([log_gauge_at_log(phi, float(v)) for v in log_x])
    slope, _ = np.polyfit(log_x, log_phi, 1)
    epsilon = 1.0 - float(slope)
    return ExponentFit(
        exponent=float(slope),
        epsilon=epsilon,
        points=points,
        verdict="ok" if epsilon > EPSILON_FLOOR else "fails",
    )


def coupling_hypotheses(coupler: DDCoupler, phi: GaugeSpec) -> CouplingHypotheses:
    return CouplingHypotheses(
        diagonal=diagonal_series_of(coupler.target.params.l_seq),
        exponent=gauge_exponent_fit(phi),
    )


# -- report ------------------------------------------------------------


def verify_coupler(
    coupler: DDCoupler,
    *,
    budget: int,
    sample: int | None = None,
    seed: int = 0,
    phi: GaugeSpec | None = None,
    density_limit: int | None = None,
) -> DDCouplingReport:
    """Every structural, injectivity, density and distance check on one coupler."""
    elements, sampled = audit_elements(coupler.encoder, budget, sample=sample, seed=seed)
    images = [coupler.inject(x) for x in elements]
    distinct = len(set(elements))
    injective = len(set(images)) == distinct
    image_in_h = all(coupler.h_contains(y) for y in images)

    index = coupler.index
    radius = None
    if not sampled and index.target_size <= budget:
        radius = density_radius(coupler, images, limit=density_limit)
    blocks_ok, products_ok = frames_ok(coupler)

    phi = phi or GaugeSpec(kind="constant")
    labels = (CURSOR_FORWARD, *coupler.source.lamp_labels)
    distances = [dd_distance_audit(coupler, s, elements, phi, sampled=sampled) for s in labels]
    report = DDCouplingReport(
        n=index.n,
        kappa=index.kappa,
        source_size=index.source_size,
        target_size=index.target_size,
        sandwich=str(index.sandwich),
        target=str(index.target),
        Q=index.Q,
        R=index.R,
        p=index.p,
        M=index.M,
        q_at_least_three=index.q_at_least_three,
        d_above_width=index.d_above_width,
        spreading_a=coupler.spreading.a,
        spreading_b=coupler.spreading.b,
        spreading_within=coupler.spreading.within(coupler.encoder.q),
        removed=coupler.corner.removed,
        removed_bound=coupler.corner.bound,
        proportional=coupler.proportional,
        e_sandwich=e_sandwich_holds(coupler),
        theta_sandwich=theta_sandwich_holds(coupler),
        layout_gaps=coupler.layout.consecutive_gaps(),
        chi_fibers_ok=chi_fibers_ok(coupler),
        blocks_ok=blocks_ok,
        base_products_ok=products_ok,
        checked=len(elements),
        sampled=sampled,
        triple_map_bijective=None if sampled else triple_map_bijective(coupler, elements),
        stability_exceptions=stability_exceptions(coupler, elements),
        injective=injective,
        image_in_h=image_in_h,
        density_radius=radius,
        density_constant=coupler.density_constant,
        distances=distances,
        splits=[dd_integrability_sum(coupler, audit) for audit in distances],
        hypotheses=coupling_hypotheses(coupler, phi),
    )
    logger.info(
        "ddcoupling verify n=%s checked=%s injective=%s density=%s ok=%s",
        index.n,
        len(elements),
        injective,
        radius,
        report.ok,
    )
    return report


__all__ = [
    "box_union_size",
    "carry_start",
    "chi_fibers_ok",
    "coupling_hypotheses",
    "dd_distance_audit",
    "dd_integrability_sum",
    "e_sandwich_holds",
    "frames_ok",
    "gauge_exponent_fit",
    "log_majorant",
    "block_bound",
    "row_weight",
    "stability_exceptions",
    "theta_sandwich_holds",
    "triple_map_bijective",
    "verify_coupler",
]
