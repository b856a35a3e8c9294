from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..domain.profile_forge import build_sequences, hypothesis_report
from ..models.lab import LabTask, TaskOutcome
from ..models.profiles import HypothesisReport, ProfileSequences, ProfileSpec
from .context import LabContext

SequenceBuilder = Callable[[ProfileSpec, int, int, int], ProfileSequences]
HypothesisChecker = Callable[[ProfileSequences, ProfileSpec | None, Fraction], HypothesisReport]


@dataclass
class BuildProfileUseCase:
    """Sequences k_m, l_m of the source profile with the summability hypotheses."""

    context: LabContext
    sequence_builder: SequenceBuilder = build_sequences
    hypothesis_checker: HypothesisChecker = hypothesis_report

    def __call__(self, task: LabTask) -> TaskOutcome:
        config = self.context.config
        seq = self.sequence_builder(config.source_profile, config.kappa, config.lam, config.depth)
        report = self.hypothesis_checker(seq, config.target_profile, config.delta)

        store = self.context.store
        written = [
            store.write_csv(
                "profile-sequences.csv",
                ["m", "k", "l"],
                ((m, k, l) for m, (k, l) in enumerate(zip(seq.k, seq.l))),
            ),
            store.write_json("profile.json", {"sequences": seq, "hypotheses": report}),
            store.write_plot(
                "profile-sums.svg",
                {
                    "Z series": _points(report.z_summability.partial_sums),
                    "diagonal series": _points(report.diagonal_summability.partial_sums),
                },
                title=f"partial sums for {seq.profile.label}",
                xlabel="m",
                ylabel="partial sum",
                logy=True,
            ),
        ]
        fit = report.exponent_fit
        return TaskOutcome(
            task=task.name,
            ok=report.in_class,
            artifacts=[path.name for path in written],
            summary={
                "profile": seq.profile.label,
                "k": seq.k,
                "l": seq.l,
                "z": report.z_summability.verdict,
                "diagonal": report.diagonal_summability.verdict,
                "exponent": None if fit is None else fit.verdict,
            },
        )


def _points(values: list[float]) -> list[tuple[float, float]]:
    return [(m, v) for m, v in enumerate(values) if v > 0]


__all__ = ["BuildProfileUseCase"]
