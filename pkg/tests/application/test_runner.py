import json
import threading
from pathlib import Path

import pytest

from src.application import SUMMARY_FILE, RunLabUseCase
from src.application.context import LabContext
from src.domain.errors import LabConfigError
from src.models.lab import LabTask, TaskOutcome
from tests.application.helpers import make_context, make_task


class RecordingHandler:
    """Stand-in use case that remembers which thread ran each task."""

    calls: list[tuple[str, list[int] | None, str]] = []

    def __init__(self, context: LabContext) -> None:
        self.context = context

    def __call__(self, task: LabTask) -> TaskOutcome:
        self.calls.append((task.name, task.n, threading.current_thread().name))
        return TaskOutcome(task=task.name, ok=True, summary={"n": task.n})


class FailingHandler:
    def __init__(self, context: LabContext) -> None:
        pass

    def __call__(self, task: LabTask) -> TaskOutcome:
        raise LabConfigError("boom", generator="c7")


@pytest.fixture(autouse=True)
def _reset_calls() -> None:
    RecordingHandler.calls = []


def test_empty_task_list_writes_nothing(tmp_path: Path) -> None:
    out = tmp_path / "out"

    summary = RunLabUseCase(make_context(out))([])

    assert summary.outcomes == []
    assert summary.ok
    assert not out.exists()


def test_outcomes_keep_task_order_across_workers(tmp_path: Path) -> None:
    handlers = {"zcoupling-verify": RecordingHandler, "folner-stats": RecordingHandler}
    tasks = [
        make_task("zcoupling-verify", n=1),
        make_task("folner-stats", n=2),
        make_task("zcoupling-verify", n=3),
    ]

    summary = RunLabUseCase(make_context(tmp_path), threads=2, handlers=handlers)(tasks)

    assert [o.summary["n"] for o in summary.outcomes] == [[1], [2], [3]]
    threads_by_name: dict[str, set[str]] = {}
    for name, _, thread in RecordingHandler.calls:
        threads_by_name.setdefault(name, set()).add(thread)
    assert len(threads_by_name["zcoupling-verify"]) == 1
    payload = json.loads((tmp_path / SUMMARY_FILE).read_text())
    assert [o["task"] for o in payload["outcomes"]] == [
        "zcoupling-verify",
        "folner-stats",
        "zcoupling-verify",
    ]


def test_errors_name_the_failing_task(tmp_path: Path) -> None:
    use_case = RunLabUseCase(make_context(tmp_path), handlers={"ddcoupling-audit": FailingHandler})

    with pytest.raises(LabConfigError) as exc_info:
        use_case([make_task("ddcoupling-audit", n=1)])

    assert exc_info.value.details == {"generator": "c7", "task": "ddcoupling-audit"}
    assert not (tmp_path / SUMMARY_FILE).exists()


def test_real_handlers_run_a_small_plan(tmp_path: Path) -> None:
    tasks = [make_task("group-check"), make_task("zcoupling-verify", n=1)]

    summary = RunLabUseCase(make_context(tmp_path), threads=2)(tasks)

    assert summary.ok
    assert [o.task for o in summary.outcomes] == ["group-check", "zcoupling-verify"]
    assert (tmp_path / "zcoupling-verify-n1.json").exists()
