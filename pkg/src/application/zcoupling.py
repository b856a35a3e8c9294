from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from ..domain.delta_core import CURSOR_FORWARD, DeltaGroup
from ..domain.z_coupler import (
    ZEncoder,
    audit_elements,
    cursor_majorant,
    gap_audit,
    majorant_series,
    verify_encoder,
)
from ..models.coupling import ZCouplingReport
from ..models.lab import LabTask, TaskOutcome
from .context import LabContext

logger = logging.getLogger(__name__)

SERIES_MIN_TERMS = 4

EncoderBuilder = Callable[[DeltaGroup, int], ZEncoder]
EncoderVerifier = Callable[..., ZCouplingReport]


@dataclass
class VerifyZCouplingUseCase:
    """Bijectivity and gap audits of the numbering of G_n by [0, |G_n| - 1]."""

    context: LabContext
    encoder_builder: EncoderBuilder = ZEncoder.build
    verifier: EncoderVerifier = verify_encoder

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        delta = self.context.source_delta()
        summary: dict[str, object] = {}
        written = []
        ok = True
        for n in self.context.n_values(task):
            report = self.verifier(
                self.encoder_builder(delta, n),
                budget=self.context.budget,
                sample=config.sample,
                seed=self.context.seed,
                phi=config.gauge,
                r_max=config.r_max,
            )
            written.append(self.context.store.write_json(f"zcoupling-verify-n{n}.json", report))
            summary[str(n)] = {
                "population": report.population,
                "checked": report.checked,
                "sampled": report.sampled,
                "injective": report.injective,
                "surjective": report.surjective,
                "max_gaps": {audit.generator: audit.max_gap for audit in report.gaps},
                "ok": report.ok,
            }
            ok &= report.ok
        return TaskOutcome(
            task=task.name, ok=ok, artifacts=[p.name for p in written], summary=summary
        )


@dataclass
class ZCouplingSumsUseCase:
    """Counting majorants over the n range, with exact gap sums where G_n fits the budget."""

    context: LabContext
    encoder_builder: EncoderBuilder = ZEncoder.build

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        delta = self.context.source_delta()
        phi = config.gauge
        kappa, q = config.kappa, delta.params.q
        ns = self.context.n_values(task)

        rows = []
        majorants: list[tuple[float, float]] = []
        measured: dict[str, list[tuple[float, float]]] = {}
        ok = True
        for n in ns:
            bound = cursor_majorant(phi, kappa, q, n)
            majorants.append((n, bound))
            rows.append((n, "cursor majorant", "counting", f"{bound:.12g}", ""))
            encoder = self.encoder_builder(delta, n)
            if encoder.size > self.context.budget:
                continue
            elements, sampled = audit_elements(encoder, self.context.budget)
            r_max = encoder.size if config.r_max is None else config.r_max
            for label in (CURSOR_FORWARD, *delta.lamp_labels):
                audit = gap_audit(encoder, label, elements, phi, r_max, sampled=sampled)
                measured.setdefault(label, []).append((n, audit.total))
                rows.append((n, label, "exhaustive", f"{audit.total:.12g}", audit.verdict))
                ok &= audit.verdict != "violated"

        series = majorant_series(phi, kappa, q, max(max(ns) + 1, SERIES_MIN_TERMS))
        store = self.context.store
        written = [
            store.write_csv(
                "zcoupling-sums.csv", ["n", "generator", "method", "total", "verdict"], rows
            ),
            store.write_json(
                "zcoupling-sums.json",
                {"gauge": phi, "majorants": dict(majorants), "series": series},
            ),
            store.write_plot(
                "zcoupling-sums.svg",
                {"cursor majorant": majorants, **measured},
                title=f"integrability sums for phi = {phi.label}",
                xlabel="n",
                ylabel="sum",
            ),
        ]
        monotone = all(a[1] <= b[1] for a, b in zip(majorants, majorants[1:]))
        ok = ok and monotone and series.verdict != "fails"
        logger.info(
            "zcoupling sums gauge=%s n=%s verdict=%s monotone=%s",
            phi.label,
            ns,
            series.verdict,
            monotone,
        )
        return TaskOutcome(
            task=task.name,
            ok=ok,
            artifacts=[p.name for p in written],
            summary={
                "gauge": phi.label,
                "majorants": {str(n): v for n, v in majorants},
                "monotone": monotone,
                "verdict": series.verdict,
            },
        )


__all__ = ["VerifyZCouplingUseCase", "ZCouplingSumsUseCase"]
