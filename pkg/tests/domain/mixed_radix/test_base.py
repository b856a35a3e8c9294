from itertools import product

import pytest

from src.domain.errors import LabConfigError, LabInvariantError
from src.domain.mixed_radix import (
    DigitRangeError,
    DigitVector,
    MixedRadixBase,
    RadixRangeError,
    decompose,
    recompose,
)

BASE = MixedRadixBase.of((2, 5, 8))
OPEN_BASE = MixedRadixBase.of((2, 5, 8), last_unbounded=True)


def test_zero_decomposes_to_zero_digits() -> None:
    assert decompose(0, BASE).as_list() == [0, 0, 0]


def test_division_algorithm_value_for_hundred() -> None:
    assert decompose(100, OPEN_BASE).as_list() == [0, 0, 10]


def test_unbounded_top_digit_absorbs_remainder() -> None:
    assert decompose(119, OPEN_BASE).as_list() == [1, 4, 11]
    assert recompose(DigitVector((1, 4, 11), OPEN_BASE)) == 119


def test_bounded_base_refuses_integers_past_capacity() -> None:
    with pytest.raises(RadixRangeError) as excinfo:
        decompose(80, BASE)

    assert excinfo.value.bound == 80
    assert isinstance(excinfo.value, LabConfigError)


def test_negative_integers_are_refused() -> None:
    with pytest.raises(RadixRangeError):
        decompose(-1, OPEN_BASE)


@pytest.mark.parametrize(
    ("digits", "expected"),
    [((0, 0, 0), 0), ((1, 0, 0), 1), ((1, 4, 7), 79), ((0, 1, 1), 12)],
)
def test_recompose_evaluates_weighted_sum(digits: tuple[int, ...], expected: int) -> None:
    assert recompose(DigitVector(digits, BASE)) == expected


def test_digit_outside_radix_is_an_invariant_error() -> None:
    with pytest.raises(DigitRangeError) as excinfo:
        DigitVector((2, 0, 0), BASE)

    assert excinfo.value.position == 0
    assert isinstance(excinfo.value, LabInvariantError)


@pytest.mark.parametrize("radices", [(), (2, 1), (0,)])
def test_base_rejects_degenerate_radices(radices: tuple[int, ...]) -> None:
    with pytest.raises(RadixRangeError):
        MixedRadixBase.of(radices)


@pytest.mark.parametrize("radices", [(2, 5, 8), (3, 2, 2, 3), (7,), (2, 2, 2, 2, 2)])
def test_codec_is_a_bijection_on_small_bases(radices: tuple[int, ...]) -> None:
    base = MixedRadixBase.of(radices)
    capacity = base.capacity
    assert capacity is not None

    vectors = [decompose(x, base).digits for x in range(capacity)]

    assert [recompose(DigitVector(v, base)) for v in vectors] == list(range(capacity))
    assert set(vectors) == set(product(*(range(b) for b in radices)))


def test_large_integers_round_trip_exactly() -> None:
    base = MixedRadixBase.of((3**40, 2**61 - 1, 10**30), last_unbounded=True)
    x = 7**200 + 12345

    assert recompose(decompose(x, base)) == x


def test_range_law_digits_above_m_vanish_exactly_below_prefix_product() -> None:
    base = MixedRadixBase.of((2, 3, 2, 3))
    for m in range(len(base)):
        bound = base.weight(m + 1)
        for x in range(base.weights[-1]):
            high_zero = all(d == 0 for d in decompose(x, base).digits[m + 1 :])
            assert high_zero == (x < bound)
