"""Summability, exponent and band checks on the sequences that drive both couplings."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ...models.profiles import (
    ExponentFit,
    HypothesisReport,
    ProfileSequences,
    ProfileSpec,
    SummabilityReport,
    Verdict,
)
from .piecewise import DEFAULT_DELTA, f_bar_map, rho_bij_map
from .profiles import in_class, log_of, log_rho

logger = logging.getLogger(__name__)

Z_SERIES_TERMS = 40
RATIO_CEILING = 0.95
RATIO_WINDOW = 3
MAX_EXP = 700.0
EPSILON_FLOOR = 0.01
FIT_POINTS = 48


def _exp(value: float) -> float:
    if value == -math.inf:
        return 0.0
    return math.inf if value > MAX_EXP else math.exp(value)


def _ratio(previous: float, current: float) -> float:
    if current == -math.inf:
        return 0.0
    return _exp(current - previous)


def summability(series: str, log_terms: Sequence[float]) -> SummabilityReport:
    """Ratio-test verdict on a positive series given by the logs of its terms.

    Summable when the last few consecutive ratios stay below a fixed ceiling,
    failing when the last term has not dropped below the first.
    """
    if not log_terms:
        return SummabilityReport(series=series, verdict="summable")
    terms = [_exp(v) for v in log_terms]
    partial, running = [], 0.0
    for term in terms:
        running += term
        partial.append(running)
    ratios = [_ratio(a, b) for a, b in zip(log_terms, log_terms[1:])]
    verdict: Verdict = "inconclusive"
    if len(ratios) >= RATIO_WINDOW and all(r <= RATIO_CEILING for r in ratios[-RATIO_WINDOW:]):
        verdict = "summable"
    elif len(log_terms) > 1 and log_terms[-1] >= log_terms[0]:
        verdict = "fails"
    return SummabilityReport(
        series=series,
        terms=terms,
        partial_sums=partial,
        last_ratio=ratios[-1] if ratios else None,
        verdict=verdict,
    )


def z_series(spec: ProfileSpec, kappa: int, terms: int = Z_SERIES_TERMS) -> SummabilityReport:
    """rho(kappa^m) kappa^-m for m = 0..terms-1."""
    log_kappa = math.log(kappa)
    logs = [log_rho(spec, kappa**m) - m * log_kappa for m in range(terms)]
    return summability("rho(kappa^m) kappa^-m", logs)


def diagonal_series_of(l_seq: Sequence[int]) -> SummabilityReport:
    """l_m exp(-l_{m-1}) over the finite levels m >= 1; empty for the lamplighter."""
    logs: list[float] = []
    for m in range(1, len(l_seq)):
        previous = l_seq[m - 1]
        if previous.bit_length() > 1000:
            logs.append(-math.inf)
        else:
            logs.append(log_of(l_seq[m]) - float(previous))
    return summability("l_m exp(-l_{m-1})", logs)


def diagonal_series(seq: ProfileSequences) -> SummabilityReport:
    return diagonal_series_of(seq.l)


def exponent_fit(
    seq: ProfileSequences,
    rho_tilde: ProfileSpec,
    delta: Fraction = DEFAULT_DELTA,
    points: int = FIT_POINTS,
) -> ExponentFit:
    """Least-squares slope of ln(rho_tilde o rho_bij^-1)(y) against ln y."""
    bij = rho_bij_map(seq, delta)
    top = max(16, 4 * seq.k[-1])
    ys = sorted({Fraction(round(v)) for v in np.geomspace(2, top, points)})
    log_y = [log_of(y) for y in ys]
    log_phi = [log_rho(rho_tilde, bij.inverse(y)) for y in ys]
    if len(ys) < 3:
        return ExponentFit(points=len(ys))
    slope, _ = np.polyfit(np.array(log_y), np.array(log_phi), 1)
    epsilon = 1.0 - float(slope)
    return ExponentFit(
        exponent=float(slope),
        epsilon=epsilon,
        points=len(ys),
        verdict="ok" if epsilon > EPSILON_FLOOR else "fails",
    )


def f_bar_band(seq: ProfileSequences) -> float | None:
    """max / min of f_bar / f over breakpoints and their geometric midpoints."""
    f_bar = f_bar_map(seq)
    xs = [x for x, _ in f_bar.points if x >= 1]
    if not xs:
        return None
    probes = set(xs)
    for a, b in zip(xs, xs[1:]):
        probes.add(Fraction(math.isqrt(int(a) * int(b))))
    spec = seq.profile
    logs = [log_of(f_bar(x)) - (log_of(x) - log_rho(spec, x)) for x in sorted(probes) if x >= 1]
    return math.exp(max(logs) - min(logs))


def hypothesis_report(
    seq: ProfileSequences,
    rho_tilde: ProfileSpec | None = None,
    delta: Fraction = DEFAULT_DELTA,
) -> HypothesisReport:
    spec = seq.profile
    report = HypothesisReport(
        profile=spec.label,
        kappa=seq.kappa,
        in_class=in_class(spec),
        f_bar_band=f_bar_band(seq),
        z_summability=z_series(spec, seq.kappa),
        diagonal_summability=diagonal_series(seq),
        exponent_fit=None if rho_tilde is None else exponent_fit(seq, rho_tilde, delta),
    )
    logger.info(
        "hypothesis report profile=%s z=%s diagonal=%s",
        spec.label,
        report.z_summability.verdict,
        report.diagonal_summability.verdict,
    )
    return report


__all__ = [
    "diagonal_series",
    "diagonal_series_of",
    "exponent_fit",
    "f_bar_band",
    "hypothesis_report",
    "summability",
    "z_series",
]
