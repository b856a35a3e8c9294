import csv
import json
from pathlib import Path

import pytest

from src.application import VerifyZCouplingUseCase, ZCouplingSumsUseCase, zcoupling
from src.models.coupling import ZCouplingReport
from tests.application.helpers import make_context, make_task


def test_verify_reports_a_bijection_on_the_smallest_lamplighter_set(tmp_path: Path) -> None:
    context = make_context(tmp_path)

    outcome = VerifyZCouplingUseCase(context)(make_task("zcoupling-verify", n=1))

    assert outcome.ok
    assert outcome.artifacts == ["zcoupling-verify-n1.json"]
    summary = outcome.summary["1"]
    assert summary["population"] == 648
    assert summary["injective"] and summary["surjective"]
    payload = json.loads((tmp_path / "zcoupling-verify-n1.json").read_text())
    assert payload["population"] == 648
    assert payload["surjective"] is True


def test_verify_fails_when_the_report_does_not_hold(tmp_path: Path) -> None:
    def broken(encoder, **_: object) -> ZCouplingReport:
        return ZCouplingReport(
            n=encoder.n,
            kappa=3,
            q=6,
            population=648,
            mu_size=1,
            checked=648,
            injective=False,
        )

    use_case = VerifyZCouplingUseCase(make_context(tmp_path), verifier=broken)

    outcome = use_case(make_task("zcoupling-verify", n=1))

    assert not outcome.ok
    assert outcome.summary["1"]["injective"] is False


def test_verify_uses_the_configured_n_values(tmp_path: Path) -> None:
    seen: list[int] = []

    def builder(delta, n):
        seen.append(n)
        raise RuntimeError("stop")

    use_case = VerifyZCouplingUseCase(make_context(tmp_path, n_values=[2]), encoder_builder=builder)

    with pytest.raises(RuntimeError):
        use_case(make_task("zcoupling-verify"))
    assert seen == [2]


def test_sums_count_majorants_beyond_the_budget(tmp_path: Path) -> None:
    context = make_context(tmp_path)

    outcome = ZCouplingSumsUseCase(context)(make_task("zcoupling-sums", n=[1, 2]))

    assert outcome.ok
    assert outcome.summary["majorants"]["1"] == pytest.approx(2 / 3)
    assert outcome.summary["majorants"]["2"] == pytest.approx(8 / 9)
    assert outcome.summary["monotone"]
    assert outcome.summary["verdict"] == "summable"
    with (tmp_path / "zcoupling-sums.csv").open(encoding="utf-8", newline="") as handle:
        rows = list(csv.DictReader(handle))
    exhaustive = {row["n"] for row in rows if row["method"] == "exhaustive"}
    assert exhaustive == {"1"}
    assert (tmp_path / "zcoupling-sums.svg").exists()


def test_identity_gauge_is_flagged_non_summable(tmp_path: Path) -> None:
    context = make_context(tmp_path, gauge={"kind": "identity"})

    outcome = ZCouplingSumsUseCase(context)(make_task("zcoupling-sums", n=[1, 2, 3]))

    assert outcome.summary["verdict"] == "fails"
    assert outcome.ok is False


def test_shrinking_majorants_fail_the_sums(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(zcoupling, "cursor_majorant", lambda phi, kappa, q, n: 1.0 / n)
    context = make_context(tmp_path)

    outcome = ZCouplingSumsUseCase(context)(make_task("zcoupling-sums", n=[1, 2]))

    assert outcome.summary["verdict"] == "summable"
    assert outcome.summary["monotone"] is False
    assert outcome.ok is False
