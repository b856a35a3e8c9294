import pytest

from src.domain.dd_coupler import CursorLayout, CursorMapError, ideal_block, target_blocks


def test_every_block_but_the_last_is_copied() -> None:
    layout = CursorLayout(9, 4, 3)

    assert layout.D == 39
    assert [layout.u(1, t) for t in range(9)] == list(range(9, 18))


def test_last_block_doubles_its_first_steps() -> None:
    layout = CursorLayout(9, 4, 3)

    assert [layout.u(3, t) for t in range(9)] == [27, 29, 31, 33, 34, 35, 36, 37, 38]
    skipped = sorted(set(range(layout.D)) - set(layout.image()))
    assert skipped == [28, 30, 32]
    assert layout.consecutive_gaps() == 0


def test_chi_glues_each_skipped_cursor_to_its_predecessor() -> None:
    layout = CursorLayout(9, 4, 3)

    assert [layout.chi(v) for v in range(27, 34)] == [27, 27, 28, 28, 29, 29, 30]
    assert all(layout.chi(layout.u(P, t)) == P * 9 + t for P in range(4) for t in range(9))


def test_chi_fibers_have_one_or_two_points() -> None:
    layout = CursorLayout(9, 4, 3)

    fibers = layout.fiber_sizes()

    assert set(fibers) == set(range(36))
    assert set(fibers.values()) == {1, 2}
    assert sum(1 for size in fibers.values() if size == 2) == 3


def test_chi_is_the_identity_without_remainder() -> None:
    layout = CursorLayout(3, 2, 0)

    assert [layout.chi(v) for v in range(6)] == list(range(6))
    assert layout.image() == tuple(range(6))


def test_preimages_of_intervals_at_most_double() -> None:
    layout = CursorLayout(9, 4, 3)

    for lo in range(36):
        for hi in range(lo, 36):
            first, last = layout.preimage((lo, hi))
            assert last - first + 1 <= 2 * (hi - lo + 1)


@pytest.mark.parametrize(("P", "t"), [(4, 0), (0, 9), (-1, 0)])
def test_cursor_map_rejects_out_of_range_blocks(P: int, t: int) -> None:
    with pytest.raises(CursorMapError):
        CursorLayout(9, 4, 3).u(P, t)


def test_split_rejects_skipped_cursors() -> None:
    with pytest.raises(CursorMapError):
        CursorLayout(9, 4, 3).split(28)


def test_ideal_blocks_follow_both_rules() -> None:
    assert ideal_block(1, 2, 1, n=1, kappa=3, p=3, Q=4) == (6, 8)
    assert ideal_block(0, 2, 1, n=1, kappa=3, p=3, Q=4) == (7, 7)
    assert ideal_block(2, 0, 0, n=1, kappa=3, p=3, Q=4) == (0, 8)
    assert ideal_block(2, 3, 0, n=1, kappa=3, p=3, Q=4) == (3, 11)
    assert ideal_block(3, 1, 2, n=1, kappa=3, p=3, Q=4) == (0, 11)


def test_target_blocks_nest_for_every_cursor_block() -> None:
    layout = CursorLayout(3, 4, 2)

    for P in range(4):
        for t in range(3):
            blocks = target_blocks(layout, P, t, n=1, kappa=3, p=3)
            assert blocks.nested()
            assert blocks.sizes_hold()
            assert blocks.contains(layout.u(P, t))
            assert blocks.block(3) == (0, 13)


def test_shells_partition_the_top_block() -> None:
    layout = CursorLayout(3, 1, 2)

    blocks = target_blocks(layout, 0, 0, n=1, kappa=3, p=2)

    assert blocks.intervals == ((0, 1), (0, 4), (0, 4))
    assert blocks.shell(0) == [0, 1]
    assert blocks.shell(1) == [2, 3, 4]
    assert blocks.shell(2) == []
