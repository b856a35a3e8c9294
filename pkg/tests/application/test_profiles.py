import csv
from pathlib import Path

from src.application import BuildProfileUseCase
from src.models.profiles import HypothesisReport, SummabilityReport
from tests.application.helpers import make_context, make_task


def test_power_profile_sequences_are_written(tmp_path: Path) -> None:
    context = make_context(tmp_path, depth=3)

    outcome = BuildProfileUseCase(context)(make_task("profile-build"))

    assert outcome.ok
    assert outcome.summary["k"] == [0, 3, 9, 27]
    assert outcome.summary["l"] == [1, 3, 9, 27]
    with (tmp_path / "profile-sequences.csv").open(encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["m", "k", "l"]
    assert rows[-1] == ["3", "27", "27"]
    assert {"profile.json", "profile-sums.svg"} <= set(outcome.artifacts)


def test_target_profile_enables_the_exponent_fit(tmp_path: Path) -> None:
    context = make_context(
        tmp_path,
        source_profile={"family": "power", "alpha": 1},
        target_profile={"family": "power", "alpha": 2},
    )

    outcome = BuildProfileUseCase(context)(make_task("profile-build"))

    assert outcome.summary["exponent"] in {"ok", "fails", "inconclusive"}


def test_profile_outside_the_class_fails_the_task(tmp_path: Path) -> None:
    def checker(seq, rho_tilde, delta) -> HypothesisReport:
        empty = SummabilityReport(series="s", verdict="inconclusive")
        return HypothesisReport(
            profile=seq.profile.label,
            kappa=seq.kappa,
            in_class=False,
            z_summability=empty,
            diagonal_summability=empty,
        )

    use_case = BuildProfileUseCase(make_context(tmp_path), hypothesis_checker=checker)

    assert not use_case(make_task("profile-build")).ok
