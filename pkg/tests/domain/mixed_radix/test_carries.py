import pytest

from src.domain.mixed_radix import (
    CarrySaturationError,
    DigitVector,
    MixedRadixBase,
    RadixRangeError,
    addition_locality_holds,
    carry_index,
    count_by_carry_index,
    decompose,
    lipschitz_image_covers,
    max_gap,
)


def test_carry_index_skips_maximal_digits() -> None:
    base = MixedRadixBase.of((2, 3, 4))

    assert carry_index(DigitVector((1, 2, 0), base), 0, base) == 2


def test_carry_index_of_zero_is_next_position() -> None:
    assert carry_index(0, 0, MixedRadixBase.of((2, 5, 8))) == 1


def test_saturated_digits_raise() -> None:
    base = MixedRadixBase.of((2, 5, 8))

    with pytest.raises(CarrySaturationError) as excinfo:
        carry_index(DigitVector((0, 4, 7), base), 0, base)

    assert excinfo.value.k == 0


def test_unbounded_top_digit_is_never_saturated() -> None:
    base = MixedRadixBase.of((2, 5, 8), last_unbounded=True)

    assert carry_index(DigitVector((0, 4, 7), base), 0, base) == 2


def test_addition_locality_worked_example() -> None:
    base = MixedRadixBase.of((2, 5, 8))

    assert addition_locality_holds(9, 9, 0, base)
    assert addition_locality_holds(9, 10, 0, base)


def test_addition_locality_detects_far_pairs() -> None:
    base = MixedRadixBase.of((2, 5, 8))

    assert not addition_locality_holds(0, 79, 0, base)


@pytest.mark.parametrize("radices", [(2, 3, 2, 3), (3, 3, 4), (2, 2, 2, 2, 2, 2)])
def test_addition_locality_has_no_exceptions_for_close_pairs(radices: tuple[int, ...]) -> None:
    base = MixedRadixBase.of(radices)
    capacity = base.weights[-1]
    for k in range(len(base)):
        window = base.weight(k + 1)
        for x in range(capacity):
            for y in range(x, min(capacity, x + window)):
                assert addition_locality_holds(x, y, k, base), (x, y, k)


def _brute_force_count(base: MixedRadixBase, k: int, m: int) -> int:
    count = 0
    for x in range(base.weights[-1]):
        try:
            count += carry_index(x, k, base) == m
        except CarrySaturationError:
            pass
    return count


def test_counting_examples() -> None:
    assert count_by_carry_index(MixedRadixBase.of((2, 3, 2)), 0, 1) == 8
    assert count_by_carry_index(MixedRadixBase.of((2, 5, 8)), 0, 2) == 14
    assert count_by_carry_index(MixedRadixBase.of((2, 5, 8)), 1, 1) == 0


@pytest.mark.parametrize("radices", [(2, 3, 2), (2, 5, 8), (3, 2, 4, 2), (5, 5, 5, 5)])
def test_counting_matches_brute_force(radices: tuple[int, ...]) -> None:
    base = MixedRadixBase.of(radices)
    for k in range(len(base)):
        for m in range(len(base)):
            assert count_by_carry_index(base, k, m) == _brute_force_count(base, k, m)


def test_counting_rejects_indices_outside_base() -> None:
    with pytest.raises(RadixRangeError):
        count_by_carry_index(MixedRadixBase.of((2, 3)), 0, 2)


def test_density_examples() -> None:
    base = MixedRadixBase.of((2, 5, 8))

    assert lipschitz_image_covers(range(80), base, 1, 1)
    assert not lipschitz_image_covers([0], base, 1, 9)
    assert lipschitz_image_covers(range(0, 80, 3), base, 1, 3)


def test_density_requires_constant_below_block() -> None:
    with pytest.raises(RadixRangeError):
        lipschitz_image_covers([0], MixedRadixBase.of((2, 5, 8)), 1, 10)


def test_small_gap_images_always_cover() -> None:
    base = MixedRadixBase.of((3, 4, 5))
    block = base.weight(2)
    for step in range(1, block):
        image = list(range(step // 2, base.weights[-1], step))
        assert max_gap(image) == (step if len(image) > 1 else 0)
        assert lipschitz_image_covers(image, base, 1, step)


def test_high_digits_of_covered_image_match_every_target() -> None:
    base = MixedRadixBase.of((2, 3, 2, 3))
    image = [x for x in range(36) if x % 4 == 1]
    covered = lipschitz_image_covers(image, base, 1, 4)
    expected = all(
        any(decompose(x, base).digits[2:] == decompose(y, base).digits[2:] for x in image)
        for y in range(36)
    )

    assert covered == expected
