from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from ..domain.errors import LabError
from ..models.lab import LabTask, RunSummary, TaskOutcome
from .context import LabContext
from .ddcoupling import DDCouplingAuditUseCase, DDCouplingSumsUseCase, VerifyDDCouplingUseCase
from .folner import FolnerStatsUseCase
from .groups import CheckGroupUseCase
from .oracles import RunOracleUseCase
from .profiles import BuildProfileUseCase
from .zcoupling import VerifyZCouplingUseCase, ZCouplingSumsUseCase

logger = logging.getLogger(__name__)

SUMMARY_FILE = "summary.json"

TaskHandler = Callable[[LabContext], Callable[[LabTask], TaskOutcome]]

TASK_HANDLERS: dict[str, TaskHandler] = {
    "profile-build": BuildProfileUseCase,
    "group-check": CheckGroupUseCase,
    "folner-stats": FolnerStatsUseCase,
    "zcoupling-verify": VerifyZCouplingUseCase,
    "zcoupling-sums": ZCouplingSumsUseCase,
    "ddcoupling-verify": VerifyDDCouplingUseCase,
    "ddcoupling-audit": DDCouplingAuditUseCase,
    "ddcoupling-sums": DDCouplingSumsUseCase,
    "oracle": RunOracleUseCase,
}


@dataclass
class RunLabUseCase:
    """Run tasks on up to ``threads`` workers.

    Tasks sharing a name write the same files, so each name runs sequentially in
    one worker; outcomes keep the order of ``tasks``.
    """

    context: LabContext
    threads: int = 1
    handlers: Mapping[str, TaskHandler] = field(default_factory=lambda: dict(TASK_HANDLERS))

    def __call__(self, tasks: Sequence[LabTask]) -> RunSummary:
        if not tasks:
            return RunSummary()
        groups: dict[str, list[int]] = defaultdict(list)
        for position, task in enumerate(tasks):
            groups[task.name].append(position)

        outcomes: list[TaskOutcome | None] = [None] * len(tasks)
        workers = max(1, min(self.threads, len(groups)))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(self._run_group, [tasks[i] for i in positions])
                for positions in groups.values()
            ]
            for positions, future in zip(groups.values(), futures):
                for i, outcome in zip(positions, future.result()):
                    outcomes[i] = outcome

        summary = RunSummary(outcomes=[o for o in outcomes if o is not None])
        self.context.store.write_json(SUMMARY_FILE, summary)
        logger.info("lab run tasks=%s workers=%s ok=%s", len(tasks), workers, summary.ok)
        return summary

    def _run_group(self, tasks: Sequence[LabTask]) -> list[TaskOutcome]:
        return [self._run(task) for task in tasks]

    def _run(self, task: LabTask) -> TaskOutcome:
        handler = self.handlers[task.name](self.context)
        logger.info("lab task start name=%s n=%s", task.name, task.n)
        try:
            outcome = handler(task)
        except LabError as exc:
            exc.details.setdefault("task", task.name)
            raise
        logger.info("lab task done name=%s ok=%s", task.name, outcome.ok)
        return outcome


__all__ = ["SUMMARY_FILE", "TASK_HANDLERS", "RunLabUseCase"]
