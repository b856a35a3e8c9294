from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from ..domain.dd_coupler import (
    DDCoupler,
    coupling_hypotheses,
    dd_distance_audit,
    dd_integrability_sum,
    verify_coupler,
)
from ..domain.delta_core import CURSOR_FORWARD, DeltaGroup
from ..domain.errors import LabConfigError
from ..domain.z_coupler import audit_elements
from ..models.coupling import CouplingAudit, DDCouplingReport
from ..models.lab import LabTask, TaskOutcome
from .context import LabContext

logger = logging.getLogger(__name__)

CouplerBuilder = Callable[[DeltaGroup, DeltaGroup, int], DDCoupler]
CouplerVerifier = Callable[..., DDCouplingReport]

AUDIT_HEADER = [
    "n",
    "generator",
    "m",
    "count",
    "fraction",
    "bound",
    "weight",
    "partial_sum",
    "majorant",
    "fitted_constant",
]


def _labels(coupler: DDCoupler, task: LabTask) -> tuple[str, ...]:
    labels = (CURSOR_FORWARD, *coupler.source.lamp_labels)
    if task.generator is None:
        return labels
    if task.generator not in labels:
        raise LabConfigError(
            f"unknown generator {task.generator!r}", generator=task.generator, known=labels
        )
    return (task.generator,)


def _audits(
    context: LabContext, coupler: DDCoupler, labels: tuple[str, ...]
) -> list[CouplingAudit]:
    elements, sampled = audit_elements(
        coupler.encoder, context.budget, sample=context.config.sample, seed=context.seed
    )
    phi = context.config.gauge
    return [dd_distance_audit(coupler, s, elements, phi, sampled=sampled) for s in labels]


@dataclass
class VerifyDDCouplingUseCase:
    """Structure, injectivity, density and distance checks of the injection G_n -> K_n."""

    context: LabContext
    coupler_builder: CouplerBuilder = DDCoupler.build
    verifier: CouplerVerifier = verify_coupler

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        source, target = self.context.source_delta(), self.context.target_delta()
        summary: dict[str, object] = {}
        written = []
        ok = True
        for n in self.context.n_values(task):
            report = self.verifier(
                self.coupler_builder(source, target, n),
                budget=self.context.budget,
                sample=config.sample,
                seed=self.context.seed,
                phi=config.gauge,
            )
            written.append(self.context.store.write_json(f"ddcoupling-verify-n{n}.json", report))
            summary[str(n)] = {
                "sandwich": report.sandwich,
                "target": report.target,
                "Q": report.Q,
                "R": report.R,
                "injective": report.injective,
                "image_in_h": report.image_in_h,
                "dense": report.dense,
                "hypotheses": report.hypotheses.hold,
                "ok": report.ok,
            }
            ok &= report.ok
        return TaskOutcome(
            task=task.name, ok=ok, artifacts=[p.name for p in written], summary=summary
        )


@dataclass
class DDCouplingAuditUseCase:
    """Per-generator distance histograms keyed by the carry block m."""

    context: LabContext
    coupler_builder: CouplerBuilder = DDCoupler.build

    def __call__(self, task: LabTask) -> TaskOutcome:
        source, target = self.context.source_delta(), self.context.target_delta()
        rows = []
        verdicts: dict[str, dict[str, str]] = {}
        for n in self.context.n_values(task):
            coupler = self.coupler_builder(source, target, n)
            for audit in _audits(self.context, coupler, _labels(coupler, task)):
                verdicts.setdefault(str(n), {})[audit.generator] = audit.verdict
                rows.extend(
                    (
                        n,
                        audit.generator,
                        row.key,
                        row.count,
                        str(row.fraction),
                        "" if row.bound is None else row.bound,
                        f"{row.weight:.12g}",
                        f"{row.partial_sum:.12g}",
                        "" if row.majorant is None else f"{row.majorant:.12g}",
                        "" if row.fitted_constant is None else f"{row.fitted_constant:.12g}",
                    )
                    for row in audit.rows
                )
        path = self.context.store.write_csv("ddcoupling-audit.csv", AUDIT_HEADER, rows)
        ok = all(v != "violated" for per_n in verdicts.values() for v in per_n.values())
        return TaskOutcome(task=task.name, ok=ok, artifacts=[path.name], summary=verdicts)


@dataclass
class DDCouplingSumsUseCase:
    """Low, middle and high parts of the integrability sums across the n range."""

    context: LabContext
    coupler_builder: CouplerBuilder = DDCoupler.build

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        source, target = self.context.source_delta(), self.context.target_delta()
        rows = []
        totals: dict[str, list[tuple[float, float]]] = {}
        hypotheses = None
        ok = True
        for n in self.context.n_values(task):
            coupler = self.coupler_builder(source, target, n)
            hypotheses = coupling_hypotheses(coupler, config.gauge)
            for audit in _audits(self.context, coupler, _labels(coupler, task)):
                split = dd_integrability_sum(coupler, audit, m_max=config.m_max)
                totals.setdefault(audit.generator, []).append((n, split.total))
                rows.append(
                    (
                        n,
                        audit.generator,
                        f"{split.low:.12g}",
                        f"{split.middle:.12g}",
                        f"{split.high:.12g}",
                        f"{split.total:.12g}",
                        audit.verdict,
                    )
                )
                ok &= audit.verdict != "violated"

        store = self.context.store
        written = [
            store.write_csv(
                "ddcoupling-sums.csv",
                ["n", "generator", "low", "middle", "high", "total", "verdict"],
                rows,
            ),
            store.write_json(
                "ddcoupling-sums.json", {"gauge": config.gauge, "hypotheses": hypotheses}
            ),
            store.write_plot(
                "ddcoupling-sums.svg",
                totals,
                title=f"diagonal integrability sums for phi = {config.gauge.label}",
                xlabel="n",
                ylabel="sum",
            ),
        ]
        logger.info(
            "ddcoupling sums gauge=%s rows=%s hypotheses=%s",
            config.gauge.label,
            len(rows),
            None if hypotheses is None else hypotheses.hold,
        )
        return TaskOutcome(
            task=task.name,
            ok=ok,
            artifacts=[p.name for p in written],
            summary={
                "gauge": config.gauge.label,
                "totals": {g: {str(n): v for n, v in pts} for g, pts in totals.items()},
                "hypotheses": None if hypotheses is None else hypotheses.hold,
            },
        )


__all__ = ["DDCouplingAuditUseCase", "DDCouplingSumsUseCase", "VerifyDDCouplingUseCase"]
