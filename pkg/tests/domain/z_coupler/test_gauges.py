from fractions import Fraction

import pytest

from src.domain.z_coupler import GaugeError, compose_integrability, gauge_value
from src.models.coupling import GaugeSpec
from src.models.profiles import ProfileSpec


def _power(exponent: str) -> GaugeSpec:
    return GaugeSpec(kind="power", exponent=exponent)


def test_powers_compose_by_multiplying_exponents() -> None:
    composed = compose_integrability(_power("2"), _power("3/2"))

    assert composed.kind == "power"
    assert composed.exponent == Fraction(3)


def test_identity_is_neutral() -> None:
    psi = _power("1/2")

    assert compose_integrability(GaugeSpec(kind="identity"), psi) == psi
    assert compose_integrability(psi, GaugeSpec(kind="identity")) == psi


def test_rho_log_absorbs_inner_powers_into_the_constant() -> None:
    phi = GaugeSpec(kind="rho_log", profile=ProfileSpec(family="power", alpha=1))

    composed = compose_integrability(phi, _power("3"))

    assert composed.kind == "rho_log"
    assert composed.profile == phi.profile
    assert composed.constant == 3


def test_small_inner_power_keeps_the_constant() -> None:
    composed = compose_integrability(GaugeSpec(kind="log"), _power("1/2"))

    assert composed.kind == "log"
    assert composed.constant == 1


def test_leaving_the_families_is_refused() -> None:
    with pytest.raises(GaugeError):
        compose_integrability(_power("2"), GaugeSpec(kind="log"))
    with pytest.raises(GaugeError):
        compose_integrability(GaugeSpec(kind="log"), lambda x: x)  # type: ignore[arg-type]


def test_gauge_values_are_exact_when_rational() -> None:
    assert gauge_value(GaugeSpec(kind="constant"), 9) == 1
    assert gauge_value(_power("2"), 3) == 9
    assert gauge_value(GaugeSpec(kind="identity", constant="1/2"), 3) == Fraction(3, 2)
    assert gauge_value(GaugeSpec(kind="log"), 1) == 0.0


def test_power_gauge_needs_an_exponent() -> None:
    with pytest.raises(ValueError):
        GaugeSpec(kind="power")
