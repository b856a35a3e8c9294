import pytest

from src.domain.delta_core import (
    DistanceModeError,
    ball_distances,
    distance_exact,
    distance_upper,
    essential_contribution,
    range_interval,
    range_size,
    word_length_exact,
    word_length_upper,
)
from src.domain.delta_core.metric import window_width
from tests.builders import commutator_word, lamplighter_delta, s3_delta, s3_fiber


def test_identity_metric_values() -> None:
    delta = s3_delta()
    e = delta.identity()

    assert range_interval(delta, e) == (0, 0)
    assert range_size(delta, e) == 0
    assert word_length_exact(delta, e, 0) == 0
    assert word_length_upper(delta, e) == 0
    assert essential_contribution(delta, e, 1) == 0


def test_range_of_lamp_then_walk() -> None:
    delta = lamplighter_delta()

    x = delta.word(["a1", "cursor+", "cursor+", "cursor+"])

    assert range_interval(delta, x) == (0, 3)
    assert word_length_exact(delta, x, 6) == 4


def test_range_of_commutator_spans_both_writes() -> None:
    delta = s3_delta(k1=2)

    assert range_interval(delta, delta.word(commutator_word(2))) == (0, 2)


def test_cursor_only_geodesic() -> None:
    delta = lamplighter_delta()

    assert word_length_exact(delta, delta.cursor(5), 8) == 5


def test_lamp_at_distance_two_costs_go_flip_return() -> None:
    delta = lamplighter_delta()
    x = delta.make(0, {2: delta.params.base.a_elements[1]})

    assert word_length_exact(delta, x, 8) == 5


def test_truncated_search_signals_none() -> None:
    delta = lamplighter_delta()

    assert word_length_exact(delta, delta.cursor(5), 3) is None


def test_essential_contribution_clips_short_lamps() -> None:
    delta = s3_delta(k1=2)
    x = delta.word(["b1", "cursor+", "cursor+"])

    assert essential_contribution(delta, delta.word(["a1"]), 1) == 0
    assert essential_contribution(delta, x, 1) == 0


def test_essential_contribution_counts_long_lamps() -> None:
    delta = s3_delta(k1=2)
    gamma = s3_fiber()
    g = delta.word(commutator_word(2))
    value = delta.full_map(g, 1)[2]

    assert essential_contribution(delta, g, 1) == 2 * (gamma.word_lengths[value] - 1)


@pytest.mark.parametrize(("k", "width"), [(1, 1), (2, 1), (3, 1), (8, 4), (9, 4)])
def test_windows_span_half_the_level_scale(k: int, width: int) -> None:
    assert window_width(k) == width


@pytest.mark.parametrize("builder", [lamplighter_delta, s3_delta])
def test_exact_length_never_exceeds_upper_bound(builder) -> None:
    delta = builder()
    for x, depth in ball_distances(delta, 4, (-2, 3)).items():
        assert depth <= word_length_upper(delta, x)


def test_commutator_length_is_within_the_metric_budget() -> None:
    delta = s3_delta(k1=2)
    g = delta.word(commutator_word(2))

    exact = word_length_exact(delta, g, 12, pad=0)

    assert exact is not None
    assert exact <= 4 * (2 * 2 + 2)
    assert exact <= word_length_upper(delta, g)


def test_range_is_minimal_for_small_lamplighter_elements() -> None:
    delta = lamplighter_delta()
    samples = [
        delta.word(["a1", "cursor+", "b1", "cursor+"]),
        delta.word(["cursor-", "a1", "cursor+", "cursor+", "b2"]),
        delta.word(["cursor+", "cursor+", "a1", "cursor-", "cursor-"]),
    ]
    for x in samples:
        lo, hi = range_interval(delta, x)
        assert word_length_exact(delta, x, 8, window=(lo, hi)) is not None
        if lo < min(0, x.t):
            assert word_length_exact(delta, x, 8, window=(lo + 1, hi)) is None
        if hi > max(0, x.t):
            assert word_length_exact(delta, x, 8, window=(lo, hi - 1)) is None


def test_interval_bound_for_single_lamp_difference() -> None:
    delta = lamplighter_delta()
    x = delta.cursor(1)
    y = delta.word(["cursor+", "a1"])

    assert distance_upper(delta, x, y, "interval") == 3
    assert distance_exact(delta, x, y, 4) == 1


def test_interval_bound_requires_equal_derived_data() -> None:
    delta = s3_delta(k1=2)
    g = delta.word(commutator_word(2))

    with pytest.raises(DistanceModeError):
        distance_upper(delta, delta.identity(), g, "interval")


def test_level_bound_covers_derived_difference() -> None:
    delta = s3_delta(k1=2)
    x = delta.identity()
    y = delta.word(commutator_word(2))

    bound = distance_upper(delta, x, y, "level")
    exact = distance_exact(delta, x, y, 12, pad=0)

    assert exact is not None
    assert exact <= bound


def test_level_bound_requires_nonnegative_ranges() -> None:
    delta = lamplighter_delta()

    with pytest.raises(DistanceModeError):
        distance_upper(delta, delta.cursor(-1), delta.identity(), "level")
