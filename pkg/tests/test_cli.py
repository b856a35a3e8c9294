import json
from pathlib import Path

import pytest

from src import cli
from src.application import runner
from src.application.instances import s3_fiber
from src.domain.group_kernel import dump_marked_gamma
from src.models.lab import LabTask, TaskOutcome
from src.platform import FAILURE_FILE


def _failure(out: Path) -> dict:
    return json.loads((out / FAILURE_FILE).read_text())


def test_run_without_tasks_exits_cleanly(tmp_path: Path) -> None:
    out = tmp_path / "out"

    assert cli.main(["run", "--out", str(out)]) == cli.EXIT_OK
    assert not out.exists()


def test_zcoupling_verify_writes_its_report(tmp_path: Path, capsys) -> None:
    code = cli.main(["zcoupling", "verify", "--n", "1", "--out", str(tmp_path)])

    assert code == cli.EXIT_OK
    assert (tmp_path / "zcoupling-verify-n1.json").exists()
    printed = json.loads(capsys.readouterr().out)
    assert printed["outcomes"][0]["task"] == "zcoupling-verify"


def test_out_may_precede_the_subcommand(tmp_path: Path) -> None:
    assert cli.main(["--out", str(tmp_path), "group", "check"]) == cli.EXIT_OK
    assert (tmp_path / "group-check.json").exists()


def test_config_file_drives_the_run(tmp_path: Path) -> None:
    config = tmp_path / "lab.toml"
    config.write_text('[[tasks]]\nname = "folner-stats"\nn = [2]\n')
    out = tmp_path / "out"

    assert cli.main(["run", "--config", str(config), "--out", str(out)]) == cli.EXIT_OK
    assert (out / "folner-growth.csv").exists()
    assert (out / "summary.json").exists()


def test_corrupted_table_exits_with_invariant_code(tmp_path: Path) -> None:
    lines = dump_marked_gamma(s3_fiber()).splitlines()
    row = lines[2].split()
    row[2], row[3] = row[3], row[2]
    lines[2] = " ".join(row)
    table = tmp_path / "bad.txt"
    table.write_text("\n".join(lines) + "\n")
    out = tmp_path / "out"

    code = cli.main(["group", "check", "--table", str(table), "--out", str(out)])

    assert code == cli.EXIT_INVARIANT
    failure = _failure(out)
    assert failure["error"] == "GroupTableError"
    assert failure["task"] == "group-check"
    assert failure["exit_code"] == 1


def test_inadmissible_config_exits_with_config_code(tmp_path: Path) -> None:
    config = tmp_path / "lab.toml"
    config.write_text("kappa = 2\n")

    code = cli.main(["run", "--config", str(config), "--out", str(tmp_path)])

    assert code == cli.EXIT_CONFIG
    failure = _failure(tmp_path)
    assert failure["error"] == "LabConfigError"
    assert failure["errors"][0]["loc"] == "kappa"


def test_budget_refusal_exits_with_budget_code(tmp_path: Path) -> None:
    config = tmp_path / "lab.toml"
    config.write_text("budget = 100\n")

    code = cli.main(
        ["ddcoupling", "audit", "--n", "1", "--config", str(config), "--out", str(tmp_path)]
    )

    assert code == cli.EXIT_BUDGET
    assert _failure(tmp_path)["error"] == "EnumerationBudgetError"


def test_oracle_prints_its_value(tmp_path: Path, capsys) -> None:
    args = ["--arg", "value=100", "--arg", "radices=[2,5,8]"]

    code = cli.main(["oracle", "varbase-decompose", *args, "--out", str(tmp_path)])

    assert code == cli.EXIT_OK
    printed = json.loads(capsys.readouterr().out)
    assert printed["outcomes"][0]["summary"]["value"] == [0, 0, 10]


@pytest.mark.parametrize(
    "argv",
    [
        ["oracle", "no-such-oracle"],
        ["oracle", "diameter", "--arg", "symmetric"],
        ["folner", "stats", "--n", "0"],
    ],
)
def test_bad_requests_exit_with_config_code(tmp_path: Path, argv: list[str]) -> None:
    assert cli.main([*argv, "--out", str(tmp_path)]) == cli.EXIT_CONFIG
    assert _failure(tmp_path)["exit_code"] == cli.EXIT_CONFIG


def test_unknown_subcommand_is_an_argparse_error() -> None:
    with pytest.raises(SystemExit) as exc_info:
        cli.main(["frobnicate"])

    assert exc_info.value.code == 2


def test_failed_invariant_check_exits_with_invariant_code(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    class Refuting:
        def __init__(self, context) -> None:
            pass

        def __call__(self, task: LabTask) -> TaskOutcome:
            return TaskOutcome(task=task.name, ok=False, summary={"in_class": False})

    monkeypatch.setitem(runner.TASK_HANDLERS, "profile-build", Refuting)

    code = cli.main(["profile", "build", "--out", str(tmp_path)])

    assert code == cli.EXIT_INVARIANT
    failure = _failure(tmp_path)
    assert failure["error"] == "InvariantCheckFailed"
    assert failure["tasks"] == ["profile-build"]
