from pathlib import Path

import pytest

from src.application import CheckGroupUseCase
from src.application.instances import s3_fiber
from src.domain.group_kernel import dump_marked_gamma
from src.domain.group_kernel.errors import GroupTableError, TableFormatError
from tests.application.helpers import make_context, make_task


def _corrupt(text: str) -> str:
    """Swap two products in one row, leaving the identity row and column intact."""
    lines = text.splitlines()
    row = lines[2].split()
    row[2], row[3] = row[3], row[2]
    lines[2] = " ".join(row)
    return "\n".join(lines) + "\n"


def test_default_products_check_the_base_and_the_s3_fiber(tmp_path: Path) -> None:
    outcome = CheckGroupUseCase(make_context(tmp_path))(make_task("group-check"))

    assert outcome.ok
    assert outcome.summary == {
        "A x B": {"order": 6, "prime_order": 1, "ok": True},
        "s3_fiber": {"order": 18, "prime_order": 3, "ok": True},
    }
    assert (tmp_path / "group-check.csv").exists()


def test_a5_fiber_has_order_360(tmp_path: Path) -> None:
    context = make_context(tmp_path, target={"kind": "a5_fiber"})

    outcome = CheckGroupUseCase(context)(make_task("group-check"))

    assert outcome.ok
    assert outcome.summary["a5_fiber"]["order"] == 360
    assert outcome.summary["a5_fiber"]["prime_order"] == 60


def test_table_files_are_checked_like_builtin_groups(tmp_path: Path) -> None:
    table = tmp_path / "s3.txt"
    table.write_text(dump_marked_gamma(s3_fiber()))
    context = make_context(tmp_path / "out", target={"kind": "table", "table": str(table)})

    outcome = CheckGroupUseCase(context)(make_task("group-check"))

    assert outcome.ok
    assert outcome.summary["s3"]["order"] == 18


def test_corrupted_table_is_an_invariant_failure(tmp_path: Path) -> None:
    table = tmp_path / "bad.txt"
    table.write_text(_corrupt(dump_marked_gamma(s3_fiber())))
    context = make_context(tmp_path / "out", target={"kind": "table", "table": str(table)})

    with pytest.raises(GroupTableError):
        CheckGroupUseCase(context)(make_task("group-check"))


def test_missing_table_is_a_format_error(tmp_path: Path) -> None:
    context = make_context(tmp_path, target={"kind": "table", "table": str(tmp_path / "x.txt")})

    with pytest.raises(TableFormatError):
        CheckGroupUseCase(context)(make_task("group-check"))
