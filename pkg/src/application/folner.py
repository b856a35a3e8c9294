from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from ..domain.delta_core import DeltaGroup
from ..domain.folner_atlas import (
    FolnerFamily,
    FolnerIndex,
    boundary_law_holds,
    cursor_only_estimate,
    folner_boundary,
    folner_template,
    growth_bounds_report,
    isoperimetric_estimate,
    sofic_defect,
    trend_slope,
)
from ..models.folner import GrowthBoundsReport
from ..models.lab import LabTask, TaskOutcome
from .context import LabContext

logger = logging.getLogger(__name__)

SOFIC_LIMIT = 2_000

GrowthReporter = Callable[[FolnerFamily, int], GrowthBoundsReport]


@dataclass
class FolnerStatsUseCase:
    """Growth table of the source family, exact where enumeration fits the budget."""

    context: LabContext
    growth_reporter: GrowthReporter = growth_bounds_report

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        delta = self.context.source_delta()
        family = FolnerFamily.of(delta.params)
        n_max = max(task.n) if task.n else config.n_max
        report = self.growth_reporter(family, n_max)

        csv_rows = []
        exact_ok = True
        for row in report.rows:
            idx = FolnerIndex(row.n, row.i, row.j)
            counted, boundary_ok = self._exact_checks(delta, family, idx, row.cardinality)
            if row.cardinality <= SOFIC_LIMIT:
                template = folner_template(delta, family, idx)
                row.sofic_defect_r1 = float(sofic_defect(delta, template, 1))
            exact_ok &= counted is not False and boundary_ok is not False
            csv_rows.append(
                (
                    row.n,
                    row.i,
                    row.j,
                    row.cardinality,
                    f"{row.ln_cardinality:.6f}",
                    "" if row.ratio is None else f"{row.ratio:.6f}",
                    row.boundary_ratio,
                    "" if counted is None else counted,
                    "" if boundary_ok is None else boundary_ok,
                    "" if row.sofic_defect_r1 is None else row.sofic_defect_r1,
                )
            )

        points = isoperimetric_estimate(family, n_max)
        cursor_points = cursor_only_estimate(n_max)
        slopes = {
            "lamps": trend_slope(points),
            "cursor_only": trend_slope(cursor_points, log_of_log=False),
        }
        store = self.context.store
        written = [
            store.write_csv(
                "folner-growth.csv",
                [
                    "n",
                    "i",
                    "j",
                    "cardinality",
                    "ln_cardinality",
                    "ratio",
                    "boundary_ratio",
                    "enumerated",
                    "boundary_law",
                    "sofic_defect_r1",
                ],
                csv_rows,
            ),
            store.write_json(
                "folner-stats.json",
                {
                    "product": config.source.label,
                    "growth": report,
                    "isoperimetric": points,
                    "slopes": slopes,
                },
            ),
            store.write_plot(
                "folner-isoperimetric.svg",
                {
                    "F_n": [(p.ln_cardinality, p.ratio) for p in points],
                    "intervals of Z": [(p.ln_cardinality, p.ratio) for p in cursor_points],
                },
                title=f"isoperimetric witnesses of {config.source.label}",
                xlabel="ln |F|",
                ylabel="|F| / |boundary F|",
                logx=True,
                logy=True,
            ),
        ]
        ok = report.chain_ratios_ok and exact_ok
        logger.info("folner stats n_max=%s rows=%s ok=%s", n_max, len(report.rows), ok)
        return TaskOutcome(
            task=task.name,
            ok=ok,
            artifacts=[path.name for path in written],
            summary={
                "n_max": n_max,
                "c1": report.c1,
                "c2": report.c2,
                "c3": report.c3,
                "c4": report.c4,
                "chain_ratios_ok": report.chain_ratios_ok,
                "slopes": slopes,
            },
        )

    def _exact_checks(
        self, delta: DeltaGroup, family: FolnerFamily, idx: FolnerIndex, cardinality: int
    ) -> tuple[bool | None, bool | None]:
        """(enumeration equals the formula, boundary law) or None above the budget."""
        if cardinality > self.context.budget:
            return None, None
        template = folner_template(delta, family, idx)
        elements = list(template.elements())
        boundary = folner_boundary(delta, template, elements)
        return len(elements) == cardinality, boundary_law_holds(template, boundary)


__all__ = ["FolnerStatsUseCase"]
