from fractions import Fraction
from functools import lru_cache

import pytest

from src.domain.dd_coupler import (
    DDCoupler,
    audit as dd_audit,
    box_union_size,
    chi_fibers_ok,
    coupling_hypotheses,
    dd_distance_audit,
    dd_integrability_sum,
    frames_ok,
    gauge_exponent_fit,
    log_majorant,
    stability_exceptions,
    triple_map_bijective,
    verify_coupler,
)
from src.domain.delta_core import CURSOR_FORWARD
from src.domain.z_coupler import audit_elements
from src.models.coupling import DDCouplingReport, GaugeSpec
from tests.builders import a5_delta, lamplighter_delta, s3_delta

BUDGET = 2_000_000
SAMPLE = 300
CONSTANT = GaugeSpec(kind="constant")


@lru_cache(maxsize=None)
def _into_s3() -> DDCoupler:
    return DDCoupler.build(lamplighter_delta(), s3_delta(), 1)


@lru_cache(maxsize=None)
def _into_lamplighter() -> DDCoupler:
    return DDCoupler.build(s3_delta(), lamplighter_delta(), 1)


@lru_cache(maxsize=None)
def _late_level(n: int) -> DDCoupler:
    """S3 level at k_1 = 8: every interior lamp move at n <= 2 sits left of the level."""
    return DDCoupler.build(s3_delta(k1=8), lamplighter_delta(), n)


@lru_cache(maxsize=None)
def _late_level_report(n: int) -> DDCouplingReport:
    return verify_coupler(_late_level(n), budget=BUDGET, sample=SAMPLE, seed=11)


@lru_cache(maxsize=None)
def _from_a5() -> DDCoupler:
    return DDCoupler.build(a5_delta(), lamplighter_delta(), 1)


@lru_cache(maxsize=None)
def _report(into_s3: bool) -> DDCouplingReport:
    coupler = _into_s3() if into_s3 else _into_lamplighter()
    return verify_coupler(coupler, budget=BUDGET)


@pytest.mark.parametrize("build", [_into_s3, _into_lamplighter])
def test_triple_map_fills_the_box_union(build) -> None:
    coupler = build()
    elements = list(coupler.encoder.template.elements())

    assert box_union_size(coupler) == coupler.encoder.size
    assert triple_map_bijective(coupler, elements)


def test_triple_map_detects_missing_points() -> None:
    coupler = _into_s3()
    elements = list(coupler.encoder.template.elements())

    assert not triple_map_bijective(coupler, elements[1:])


@pytest.mark.parametrize("build", [_into_s3, _into_lamplighter])
def test_lamps_keep_high_digits_and_the_block(build) -> None:
    coupler = build()

    assert stability_exceptions(coupler, list(coupler.encoder.template.elements())) == 0


@pytest.mark.parametrize("into_s3", [True, False])
def test_smallest_pairs_pass_every_audit(into_s3: bool) -> None:
    report = _report(into_s3)

    assert report.ok
    assert report.injective and report.image_in_h
    assert report.triple_map_bijective
    assert report.e_sandwich and report.theta_sandwich
    assert report.chi_fibers_ok and report.blocks_ok and report.base_products_ok
    assert report.layout_gaps == 0
    assert report.removed == 0
    assert report.density_radius is not None
    assert all(audit.exceptions == 0 for audit in report.distances)


def test_every_interior_element_is_audited() -> None:
    coupler = _into_s3()
    elements = list(coupler.encoder.template.elements())

    audit = dd_distance_audit(coupler, CURSOR_FORWARD, elements, CONSTANT)

    assert audit.key_name == "m"
    assert audit.interior == 216
    assert [row.key for row in audit.rows] == [3]
    assert audit.rows[0].fraction == Fraction(1, 3)
    assert audit.verdict == "ok"


def test_lamps_never_carry_below_the_third_digit() -> None:
    coupler = _into_lamplighter()
    elements = list(coupler.encoder.template.elements())

    for label in coupler.source.lamp_labels:
        audit = dd_distance_audit(coupler, label, elements, CONSTANT)
        assert all(row.key > 2 for row in audit.rows)
        assert log_majorant(coupler, label, 2) == float("-inf")


def test_majorants_give_finite_fitted_constants() -> None:
    report = _report(True)

    for audit in report.distances:
        for row in audit.rows:
            assert row.majorant is not None and row.majorant > 0
            assert row.fitted_constant is not None and row.fitted_constant > 0


def test_constant_gauge_splits_into_at_most_one() -> None:
    for into_s3 in (True, False):
        for split in _report(into_s3).splits:
            assert 0 <= split.total <= 1


def test_splits_follow_the_block_exponent() -> None:
    into_s3, into_lamplighter = _report(True), _report(False)

    assert all(split.high == pytest.approx(1 / 3) for split in into_s3.splits)
    assert all(split.middle == pytest.approx(1 / 3) for split in into_lamplighter.splits)
    assert all(split.low == 0 for split in into_lamplighter.splits)


def test_integrability_sum_stops_at_the_cutoff() -> None:
    coupler = _into_s3()
    audit = _report(True).distances[0]

    split = dd_integrability_sum(coupler, audit, m_max=2)

    assert split.total == 0


def test_gauge_exponent_fit_reads_power_gauges() -> None:
    fit = gauge_exponent_fit(GaugeSpec(kind="power", exponent=Fraction(1, 2)))

    assert fit.exponent == pytest.approx(0.5)
    assert fit.verdict == "ok"
    assert gauge_exponent_fit(CONSTANT).verdict == "ok"


def test_linear_gauge_fails_the_exponent_hypothesis() -> None:
    hypotheses = coupling_hypotheses(_into_s3(), GaugeSpec(kind="identity"))

    assert hypotheses.exponent.verdict == "fails"
    assert not hypotheses.hold


def test_sampled_runs_skip_exhaustive_verdicts() -> None:
    report = verify_coupler(_into_lamplighter(), budget=100, sample=50, seed=3)

    assert report.sampled
    assert report.checked == 50
    assert report.triple_map_bijective is None
    assert report.density_radius is None


def test_exceeded_distance_bounds_fail_the_report(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(dd_audit, "block_bound", lambda coupler, m: 0)

    report = verify_coupler(_into_s3(), budget=BUDGET)

    assert report.p == 1
    assert all(audit.verdict == "violated" for audit in report.distances)
    assert all(audit.exceptions == audit.interior for audit in report.distances)
    assert report.ok is False


@pytest.mark.parametrize(("n", "shape"), [(1, (4, 1, 1, 2)), (2, (11, 1, 2, 3))])
def test_late_level_source_reaches_the_second_scale(n: int, shape: tuple[int, ...]) -> None:
    index = _late_level(n).index

    assert (index.D, index.Q, index.R, index.p) == shape
    assert index.M == 0


def test_late_level_layout_doubles_the_first_cursors() -> None:
    layout = _late_level(2).layout

    assert [layout.u(0, t) for t in range(9)] == [0, 2, 4, 5, 6, 7, 8, 9, 10]
    assert sorted(set(range(11)) - set(layout.image())) == [1, 3]
    fibers = layout.fiber_sizes()
    assert {v for v, size in fibers.items() if size == 2} == {0, 1}
    assert set(fibers) == set(range(9))


@pytest.mark.parametrize("n", [1, 2])
def test_late_level_pairs_pass_every_audit(n: int) -> None:
    report = _late_level_report(n)

    assert report.sampled is (n == 2)
    assert report.injective and report.image_in_h
    assert report.chi_fibers_ok and report.blocks_ok and report.base_products_ok
    assert report.layout_gaps == 0
    assert report.removed == 0
    assert report.stability_exceptions == 0
    assert all(audit.exceptions == 0 for audit in report.distances)
    assert all(audit.verdict == "ok" for audit in report.distances)
    assert report.ok


def test_second_scale_carries_stop_inside_the_cursor_blocks() -> None:
    coupler = _late_level(2)
    report = _late_level_report(2)
    p = coupler.index.p

    for audit in report.distances:
        keys = [row.key for row in audit.rows]
        assert keys[0] == p
        assert set(keys) <= {p, p + 1}
        assert audit.rows[0].bound == 6 * 3**p
    for split in report.splits:
        assert split.low > 0
        assert split.high == 0


def test_majorants_stay_finite_across_the_scales() -> None:
    for n in (1, 2):
        for audit in _late_level_report(n).distances:
            for row in audit.rows:
                assert row.majorant is not None and 0 < row.majorant < float("inf")
                assert row.fitted_constant is not None and row.fitted_constant > 0


def test_bounds_and_weights_follow_the_block_index() -> None:
    coupler = _late_level(2)
    index = coupler.index
    phi = GaugeSpec(kind="power", exponent=Fraction(1, 2))

    assert [dd_audit.block_bound(coupler, m) for m in (2, 3)] == [54, 162]
    assert dd_audit.block_bound(coupler, 4) > 3 * index.D
    assert dd_audit.row_weight(coupler, phi, 2) == pytest.approx(3.0)
    assert dd_audit.row_weight(coupler, phi, 4) == pytest.approx(27**0.5)
    assert dd_audit.row_weight(coupler, phi, 5) == pytest.approx(11**0.5)
    assert log_majorant(coupler, CURSOR_FORWARD, 2) > log_majorant(coupler, CURSOR_FORWARD, 3)
    assert log_majorant(coupler, coupler.source.lamp_labels[0], 2) == float("-inf")


def test_two_cursor_blocks_split_the_derived_packing() -> None:
    coupler = _from_a5()
    index = coupler.index
    report = verify_coupler(coupler, budget=1_000, sample=SAMPLE, seed=5)
    elements, _ = audit_elements(coupler.encoder, 1_000, sample=SAMPLE, seed=5)

    assert (index.D, index.Q, index.R, index.p) == (6, 2, 0, 2)
    assert coupler.layout.image() == tuple(range(6))
    assert (coupler.spreading.a, coupler.spreading.b) == (8, -5177)
    assert report.sampled
    assert report.chi_fibers_ok and report.blocks_ok and report.base_products_ok
    assert report.injective and report.image_in_h
    assert {coupler.source_numbering.extract_EP(x)[1] for x in elements} == {0, 1}
    assert report.stability_exceptions == 0
    assert all(audit.exceptions == 0 for audit in report.distances)
    assert report.ok


def test_wide_remainder_keeps_fibers_and_frames() -> None:
    coupler = DDCoupler.build(s3_delta(), lamplighter_delta(), 2)
    layout = coupler.layout

    assert (coupler.index.Q, coupler.index.R) == (1, 6)
    assert sorted(set(range(15)) - set(layout.image())) == [1, 3, 5, 7, 9, 11]
    assert chi_fibers_ok(coupler)
    assert frames_ok(coupler) == (True, True)
    assert coupler.spreading.within(6)
