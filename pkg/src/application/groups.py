from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..domain.group_kernel import MarkedGamma, check_marked_gamma
from ..models.lab import LabTask, ProductSpec, TaskOutcome
from ..models.reports import MarkedGammaCheck
from .context import LabContext
from .instances import level_gamma

GammaResolver = Callable[[ProductSpec], MarkedGamma]
GammaChecker = Callable[..., MarkedGammaCheck]


@dataclass
class CheckGroupUseCase:
    """Exhaustive table checks of every marked group the configured products use."""

    context: LabContext
    resolver: GammaResolver = level_gamma
    checker: GammaChecker = check_marked_gamma

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        checks: dict[str, MarkedGammaCheck] = {}
        for spec in (config.source, config.target):
            name = "A x B" if spec.kind == "lamplighter" else spec.label.split("@")[0]
            if name not in checks:
                checks[name] = self.checker(self.resolver(spec), name=name)

        store = self.context.store
        rows = [
            (c.name, c.order, c.prime_order, c.q, c.diameter, c.ok) for c in checks.values()
        ]
        written = [
            store.write_csv(
                "group-check.csv", ["name", "order", "prime_order", "q", "diameter", "ok"], rows
            ),
            store.write_json("group-check.json", list(checks.values())),
        ]
        return TaskOutcome(
            task=task.name,
            ok=all(c.ok for c in checks.values()),
            artifacts=[path.name for path in written],
            summary={
                name: {"order": c.order, "prime_order": c.prime_order, "ok": c.ok}
                for name, c in checks.items()
            },
        )


__all__ = ["CheckGroupUseCase"]
