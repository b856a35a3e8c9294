import math
from fractions import Fraction

import pytest

from src.domain.delta_core import CURSOR_FORWARD, DeltaGroup
from src.domain.folner_atlas import EnumerationBudgetError
from src.domain.z_coupler import (
    ZEncoder,
    carry_histogram,
    cursor_majorant,
    gap_audit,
    integrability_sum,
    majorant_series,
    observed_carry_histogram,
    saturated_count,
    verify_encoder,
)
from src.models.coupling import GaugeSpec
from src.models.profiles import ProfileSpec
from tests.builders import lamplighter_delta, s3_delta

BUDGET = 2_000_000


def _rho_log(profile: ProfileSpec) -> GaugeSpec:
    return GaugeSpec(kind="rho_log", profile=profile)


def test_carry_histogram_counts_cursor_digits() -> None:
    counts = carry_histogram(3, 2, 81)

    assert counts == {0: 54, 1: 18}
    assert sum(counts.values()) + saturated_count(3, 2, 81) == 81
    assert carry_histogram(3, 3, 27)[2] == 2


def test_carry_histogram_matches_enumeration() -> None:
    encoder = ZEncoder.build(s3_delta(), 1)

    observed, saturated = observed_carry_histogram(encoder.template.elements(), 3, 1)

    assert observed == carry_histogram(3, 1, encoder.size) == {0: 1296}
    assert saturated == saturated_count(3, 1, encoder.size) == 648


@pytest.mark.parametrize("delta", [lamplighter_delta(), s3_delta()])
def test_first_window_passes_every_audit(delta: DeltaGroup) -> None:
    report = verify_encoder(ZEncoder.build(delta, 1), budget=BUDGET)

    assert report.ok
    assert report.injective and report.surjective
    assert report.histogram_matches
    assert report.stability_exceptions == 0
    assert all(audit.exceptions == 0 for audit in report.gaps)


def test_constant_gauge_sums_to_the_interior_share() -> None:
    report = verify_encoder(ZEncoder.build(lamplighter_delta(), 1), budget=BUDGET)

    for audit in report.gaps:
        assert math.isclose(audit.total, 1 / 3)
        assert sum(row.fraction for row in audit.rows) == Fraction(1, 3)


def test_lamp_sums_stay_below_rho_log_q() -> None:
    encoder = ZEncoder.build(lamplighter_delta(), 1)
    elements = list(encoder.template.elements())
    phi = _rho_log(ProfileSpec(family="identity"))

    for label in encoder.delta.lamp_labels:
        audit = gap_audit(encoder, label, elements, phi, r_max=10)
        assert audit.total <= math.log(6)
        assert audit.max_gap is not None and audit.max_gap <= 6


def test_cursor_audit_rows_are_sorted_gaps() -> None:
    encoder = ZEncoder.build(lamplighter_delta(), 1)
    elements = list(encoder.template.elements())

    audit = gap_audit(encoder, CURSOR_FORWARD, elements, GaugeSpec(kind="constant"), r_max=648)

    keys = [row.key for row in audit.rows]
    assert keys == sorted(keys)
    assert audit.interior == sum(row.count for row in audit.rows) == 216


def test_large_windows_need_a_sample() -> None:
    encoder = ZEncoder.build(lamplighter_delta(), 2)

    with pytest.raises(EnumerationBudgetError):
        verify_encoder(encoder, budget=BUDGET)

    report = verify_encoder(encoder, budget=BUDGET, sample=200, seed=3)

    assert report.sampled and report.surjective is None
    assert report.injective and report.round_trip_failures == 0


def test_sqrt_majorant_is_monotone_and_bounded() -> None:
    phi = _rho_log(ProfileSpec(family="power", alpha=1))

    series = majorant_series(phi, 3, 6, terms=6)
    sums = [cursor_majorant(phi, 3, 6, n) for n in range(1, 7)]

    assert series.verdict == "summable"
    assert sums == sorted(sums)
    for n, value in enumerate(sums, start=1):
        assert math.isclose(value, 2 / 3 * series.partial_sums[n - 1])


def test_identity_profile_majorant_is_not_summable() -> None:
    series = majorant_series(_rho_log(ProfileSpec(family="identity")), 3, 6, terms=8)

    assert series.verdict != "summable"
    assert series.last_ratio is not None and series.last_ratio > 0.95


def test_integrability_sum_is_exact_and_stops_at_the_cutoff() -> None:
    phi = GaugeSpec(kind="identity")

    total, rows = integrability_sum({1: 2, 3: 1, 9: 1}, population=4, r_max=3, phi=phi)

    assert total == Fraction(5, 4)
    assert [row.key for row in rows] == [1, 3]
    assert rows[-1].partial_sum == pytest.approx(1.25)
