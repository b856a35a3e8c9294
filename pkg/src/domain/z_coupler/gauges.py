"""Evaluation and symbolic composition of integrability gauges."""

from __future__ import annotations

import math
from fractions import Fraction

from ...models.coupling import GaugeSpec
from ..profile_forge import evaluate_rho, log_rho
from .errors import GaugeError

Number = int | Fraction | float


def constant_gauge(value: int | Fraction = 1) -> GaugeSpec:
    return GaugeSpec(kind="constant", constant=Fraction(value))


def gauge_value(phi: GaugeSpec, r: int) -> Number:
    """phi(r), exact whenever the gauge is rational at r; log and rho_log clamp at r = 1."""
    c = phi.constant
    if phi.kind == "constant":
        return c
    if phi.kind == "identity":
        return c * r
    if phi.kind == "power":
        exponent = phi.exponent or Fraction(1)
        if exponent.denominator == 1:
            return c * Fraction(r) ** exponent.numerator
        return float(c) * float(r) ** float(exponent)
    ln_r = math.log(max(r, 1))
    if phi.kind == "log":
        return float(c) * ln_r
    assert phi.profile is not None
    return float(c) * float(evaluate_rho(phi.profile, ln_r))


def log_gauge_at_log(phi: GaugeSpec, ln_x: float) -> float:
    """ln phi(x) given ln x, for arguments far beyond float range."""
    ln_c = math.log(phi.constant.numerator) - math.log(phi.constant.denominator)
    if phi.kind == "constant":
        return ln_c
    if phi.kind == "identity":
        return ln_c + ln_x
    if phi.kind == "power":
        return ln_c + float(phi.exponent or 1) * ln_x
    if phi.kind == "log":
        return ln_c + math.log(max(ln_x, 1.0))
    assert phi.profile is not None
    return ln_c + log_rho(phi.profile, ln_x)


def compose_integrability(phi: GaugeSpec, psi: GaugeSpec) -> GaugeSpec:
    """phi o psi inside the symbolic families, up to multiplicative constants.

    rho(log(x^p)) = rho(p log x) <= max(p, 1) rho(log x) for profiles whose
    x / rho(x) is nondecreasing.
    """
    if not isinstance(phi, GaugeSpec) or not isinstance(psi, GaugeSpec):
        raise GaugeError("composition needs symbolic gauges")
    if phi.kind == "constant":
        return phi
    if phi.kind == "identity" and phi.constant == 1:
        return psi
    if psi.kind == "identity" and psi.constant == 1:
        return phi
    if psi.kind == "identity":
        return phi.model_copy(update={"constant": phi.constant * _scale(phi, psi.constant)})
    if phi.kind == "identity":
        return psi.model_copy(update={"constant": phi.constant * psi.constant})
    if phi.kind == "power" and psi.kind == "power":
        exponent = phi.exponent or Fraction(1)
        constant = phi.constant * _rational_power(psi.constant, exponent)
        return GaugeSpec(kind="power", exponent=exponent * (psi.exponent or 1), constant=constant)
    if phi.kind in ("log", "rho_log") and psi.kind == "power":
        p = psi.exponent or Fraction(1)
        # log(c x^p) <= (p + 1) log x once x >= c.
        factor = max(p, Fraction(1)) if psi.constant == 1 else p + 1
        return phi.model_copy(update={"constant": phi.constant * factor})
    raise GaugeError("composition leaves the symbolic families", outer=phi.label, inner=psi.label)


def _rational_power(value: Fraction, exponent: Fraction) -> Fraction:
    if exponent.denominator == 1:
        return value**exponent.numerator
    return Fraction(float(value) ** float(exponent)).limit_denominator(10**6)


def _scale(phi: GaugeSpec, factor: Fraction) -> Fraction:
    """A constant C with phi(factor x) <= C phi(x) for large x."""
    if phi.kind == "power":
        return _rational_power(factor, phi.exponent or Fraction(1))
    if phi.kind in ("log", "rho_log"):
        return Fraction(2) if factor > 1 else Fraction(1)
    return factor


__all__ = ["compose_integrability", "constant_gauge", "gauge_value", "log_gauge_at_log"]
