import numpy as np
import pytest

from src.domain.group_kernel import (
    FiniteGroup,
    GroupTableError,
    UnreachableElementError,
    alternating_group,
    check_associativity,
    cyclic_group,
    diameter,
    direct_product,
    normal_closure,
    perm_from_cycles,
    symmetric_group,
    word_lengths,
)


def test_normal_closure_of_identity_is_trivial() -> None:
    group = symmetric_group(3)

    assert normal_closure(group, [group.identity]) == frozenset({group.identity})


def test_normal_closure_of_three_cycle_in_s3_is_a3() -> None:
    group = symmetric_group(3)
    rotation = group.id_of(perm_from_cycles(3, (1, 2, 3)))

    closure = normal_closure(group, [rotation])

    assert len(closure) == 3
    assert all(group.element_order(g) in (1, 3) for g in closure)


def test_a5_is_simple() -> None:
    group = alternating_group(5)
    assert group.order == 60
    for g in range(group.order):
        if g != group.identity:
            assert len(normal_closure(group, [g])) == 60


def test_directed_diameter_of_z2_times_z3() -> None:
    group = direct_product(cyclic_group(2), cyclic_group(3))
    a = group.id_of((1, 0))
    b = group.id_of((0, 1))

    lengths = word_lengths(group, [a, b])

    assert diameter(group, [a, b]) == 3
    assert lengths[group.id_of((1, 2))] == 3


def test_symmetric_diameter_uses_inverses() -> None:
    group = direct_product(cyclic_group(2), cyclic_group(3))
    a = group.id_of((1, 0))
    b = group.id_of((0, 1))

    assert diameter(group, [a, b], symmetric=True) == 2


def test_trivial_group_has_diameter_zero() -> None:
    assert diameter(cyclic_group(1), []) == 0


def test_non_generating_set_is_reported() -> None:
    group = cyclic_group(6)

    with pytest.raises(UnreachableElementError) as excinfo:
        diameter(group, [2])

    assert excinfo.value.reached == 3
    assert excinfo.value.order == 6


def test_permutation_convention_applies_right_factor_first() -> None:
    group = symmetric_group(3)
    swap = perm_from_cycles(3, (1, 2))
    rotation = perm_from_cycles(3, (1, 2, 3))

    product = group.label(group.mul(group.id_of(swap), group.id_of(rotation)))

    assert product == tuple(swap[i] for i in rotation)


@pytest.mark.parametrize("builder", [lambda: symmetric_group(4), lambda: alternating_group(5)])
def test_closure_groups_are_associative(builder) -> None:
    check_associativity(builder())


def test_non_latin_rows_are_rejected() -> None:
    with pytest.raises(GroupTableError) as excinfo:
        FiniteGroup(((0, 1), (1, 1)))

    assert excinfo.value.law == "latin"


def test_non_associative_loop_is_detected() -> None:
    # A Latin square with identity 0 that is not a group table.
    table = (
        (0, 1, 2, 3, 4),
        (1, 0, 3, 4, 2),
        (2, 4, 0, 1, 3),
        (3, 2, 4, 0, 1),
        (4, 3, 1, 2, 0),
    )
    with pytest.raises(GroupTableError) as excinfo:
        check_associativity(FiniteGroup(table))

    assert excinfo.value.law == "associativity"


def test_sampled_associativity_on_large_group() -> None:
    group = symmetric_group(6)
    assert group.order == 720

    check_associativity(group, samples=5_000, rng=np.random.default_rng(3))
