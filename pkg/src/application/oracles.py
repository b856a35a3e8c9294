"""Brute-force oracles that stamp independently computed values, with provenance."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from ..domain.delta_core import DeltaGroup, word_length_exact, word_length_upper
from ..domain.errors import LabConfigError
from ..domain.folner_atlas import FolnerFamily, FolnerIndex, enumerate_folner
from ..domain.group_kernel import base_gamma, diameter
from ..domain.mixed_radix import MixedRadixBase, decompose
from ..domain.z_coupler import ZEncoder, audit_elements, observed_carry_histogram
from ..models.lab import LabTask, ProductSpec, TaskOutcome
from .context import LabContext
from .instances import a5_fiber, build_delta, s3_fiber

logger = logging.getLogger(__name__)

Args = Mapping[str, Any]

DEFAULT_WORD_LIMIT = 12

_NAMED_GROUPS = {"z2xz3": base_gamma, "s3_fiber": s3_fiber, "a5_fiber": a5_fiber}


@dataclass(frozen=True)
class Oracle:
    name: str
    method: str
    compute: Callable[[LabContext, Args], Any]


def _require(args: Args, key: str) -> Any:
    if key not in args:
        raise LabConfigError(f"oracle argument {key!r} is required", argument=key)
    return args[key]


def _delta(context: LabContext, args: Args) -> DeltaGroup:
    product = ProductSpec.model_validate(args.get("product", {"kind": "lamplighter"}))
    return build_delta(product, int(args.get("kappa", context.kappa)))


def _varbase_decompose(context: LabContext, args: Args) -> list[int]:
    base = MixedRadixBase.of(
        [int(b) for b in _require(args, "radices")],
        last_unbounded=bool(args.get("last_unbounded", True)),
    )
    return list(decompose(int(_require(args, "value")), base).digits)


def _diameter(context: LabContext, args: Args) -> int:
    name = str(args.get("group", "z2xz3"))
    if name not in _NAMED_GROUPS:
        raise LabConfigError(f"unknown group {name!r}", group=name, known=sorted(_NAMED_GROUPS))
    marked = _NAMED_GROUPS[name]()
    if args.get("marking", False):
        gens = [*marked.a_elements, *marked.b_elements]
    else:
        gens = [marked.a_elements[1], marked.b_elements[1]]
    return diameter(marked.gamma, gens, symmetric=bool(args.get("symmetric", False)))


def _word_length(context: LabContext, args: Args) -> dict[str, int | None]:
    delta = _delta(context, args)
    x = delta.word([str(s) for s in _require(args, "word")])
    limit = int(args.get("limit", DEFAULT_WORD_LIMIT))
    return {"exact": word_length_exact(delta, x, limit), "upper": word_length_upper(delta, x)}


def _folner_count(context: LabContext, args: Args) -> int:
    delta = _delta(context, args)
    family = FolnerFamily.of(delta.params)
    n = int(_require(args, "n"))
    idx = family.last(n)
    if "i" in args or "j" in args:
        idx = family.validate(FolnerIndex(n, int(args.get("i", 0)), int(args.get("j", 1))))
    return sum(1 for _ in enumerate_folner(delta, family, idx, context.budget))


def _carry_histogram(context: LabContext, args: Args) -> dict[str, Any]:
    delta = _delta(context, args)
    n = int(_require(args, "n"))
    encoder = ZEncoder.build(delta, n)
    elements, _ = audit_elements(encoder, context.budget)
    counts, saturated = observed_carry_histogram(elements, encoder.kappa, n)
    return {"counts": counts, "saturated": saturated}


ORACLES: dict[str, Oracle] = {
    oracle.name: oracle
    for oracle in (
        Oracle("varbase-decompose", "iterated euclidean division", _varbase_decompose),
        Oracle("diameter", "breadth-first search on the Cayley table", _diameter),
        Oracle("word-length", "windowed breadth-first search in the Cayley graph", _word_length),
        Oracle("folner-count", "exhaustive enumeration", _folner_count),
        Oracle("carry-histogram", "exhaustive carry scan of every cursor", _carry_histogram),
    )
}


def oracle_names() -> list[str]:
    return sorted(ORACLES)


@dataclass
class RunOracleUseCase:
    """Compute one registered oracle and append its provenance record."""

    context: LabContext
    registry: Mapping[str, Oracle] | None = None

    def __call__(self, task: LabTask) -> TaskOutcome:
        registry = ORACLES if self.registry is None else self.registry
        name = task.oracle or ""
        if name not in registry:
            raise LabConfigError(
                f"unknown oracle {name!r}", oracle=name, known=sorted(registry)
            )
        oracle = registry[name]
        value = oracle.compute(self.context, task.args)
        record = {"oracle": name, "args": dict(task.args), "value": value, "method": oracle.method}
        path = self.context.store.append_provenance(record)
        logger.info("oracle name=%s value=%s", name, value)
        return TaskOutcome(task=task.name, ok=True, artifacts=[path.name], summary=record)


__all__ = ["ORACLES", "Oracle", "RunOracleUseCase", "oracle_names"]
