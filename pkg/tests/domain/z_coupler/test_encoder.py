from functools import lru_cache

import numpy as np
import pytest

from src.domain.delta_core import CURSOR_FORWARD
from src.domain.z_coupler import InteriorError, ZDomainError, ZEncoder, neighbor_gap
from tests.builders import lamplighter_delta, s3_delta


@lru_cache(maxsize=None)
def _lamplighter_encoder(n: int = 1) -> ZEncoder:
    return ZEncoder.build(lamplighter_delta(), n)


@lru_cache(maxsize=None)
def _s3_encoder() -> ZEncoder:
    return ZEncoder.build(s3_delta(), 1)


def test_first_lamplighter_set_has_648_elements() -> None:
    encoder = _lamplighter_encoder()

    assert encoder.size == 648
    assert encoder.mu_size == 1
    assert encoder.radices == (6, 3, 36, 1)


def test_identity_encodes_to_zero() -> None:
    encoder = _lamplighter_encoder()
    delta = encoder.delta

    assert encoder.encode(delta.identity()) == 0
    assert encoder.decode(0) == delta.identity()


def test_encode_is_a_bijection_onto_the_interval() -> None:
    encoder = _lamplighter_encoder()

    codes = [encoder.encode(x) for x in encoder.template.elements()]

    assert sorted(codes) == list(range(648))
    assert all(encoder.encode(encoder.decode(z)) == z for z in range(648))


def test_largest_code_has_maximal_digits() -> None:
    encoder = _lamplighter_encoder()
    delta = encoder.delta

    assert encoder.decode(647) == delta.make(2, {0: 5, 1: 5, 2: 5})
    assert encoder.digits(encoder.decode(647)).digits == (5, 2, 35, 0)


def test_derived_instance_packs_the_derived_part() -> None:
    encoder = _s3_encoder()

    codes = {encoder.encode(x) for x in encoder.template.elements()}

    assert encoder.size == 1944
    assert encoder.mu_size == 3
    assert codes == set(range(1944))


def test_lamp_gaps_stay_within_q() -> None:
    encoder = _lamplighter_encoder()
    delta = encoder.delta

    gaps = [
        neighbor_gap(encoder, x, s)
        for x in encoder.template.elements()
        if encoder.is_interior(x)
        for s in delta.lamp_labels
    ]

    assert max(gaps) <= 6
    assert min(gaps) >= 1


def test_cursor_gap_respects_the_carry_bound() -> None:
    encoder = _lamplighter_encoder()

    interior = [x for x in encoder.template.elements() if encoder.is_interior(x)]

    assert len(interior) == 216
    for x in interior:
        gap = encoder.neighbor_gap(x, CURSOR_FORWARD)
        assert 1 <= gap < encoder.gap_bound(x, CURSOR_FORWARD) == 3 * 6**3


def test_gap_needs_an_interior_cursor() -> None:
    encoder = _lamplighter_encoder()

    with pytest.raises(InteriorError):
        encoder.neighbor_gap(encoder.delta.identity(), CURSOR_FORWARD)


def test_elements_outside_the_window_are_rejected() -> None:
    encoder = _lamplighter_encoder()
    delta = encoder.delta

    with pytest.raises(ZDomainError):
        encoder.encode(delta.make(0, {3: 1}))
    with pytest.raises(ZDomainError):
        encoder.decode(648)


def test_second_window_round_trips_on_samples() -> None:
    encoder = _lamplighter_encoder(2)
    rng = np.random.default_rng(11)

    assert encoder.size == 9 * 6**9
    for _ in range(300):
        x = encoder.template.random_element(rng)
        z = encoder.encode(x)
        assert 0 <= z < encoder.size
        assert encoder.decode(z) == x
