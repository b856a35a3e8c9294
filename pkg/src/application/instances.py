"""Concrete group instances named by the lab configuration."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from ..domain.delta_core import DeltaGroup, DeltaParams
from ..domain.group_kernel import (
    MarkedGamma,
    alternating_group,
    base_gamma,
    fiber_product_gamma,
    load_marked_gamma,
    perm_from_cycles,
    symmetric_group,
)
from ..domain.group_kernel.errors import TableFormatError
from ..models.lab import ProductSpec


@lru_cache(maxsize=None)
def s3_fiber() -> MarkedGamma:
    """Fiber product over S3 with x = (1 2) and y = (1 2 3); |Gamma| = 18, |Gamma'| = 3."""
    h_group = symmetric_group(3)
    x = h_group.id_of(perm_from_cycles(3, (1, 2)))
    y = h_group.id_of(perm_from_cycles(3, (1, 2, 3)))
    return fiber_product_gamma(h_group, x, y)


@lru_cache(maxsize=None)
def a5_fiber() -> MarkedGamma:
    """Fiber product over A5 with x = (1 2)(3 4) and y = (1 3 5); |Gamma| = 360."""
    h_group = alternating_group(5)
    x = h_group.id_of(perm_from_cycles(5, (1, 2), (3, 4)))
    y = h_group.id_of(perm_from_cycles(5, (1, 3, 5)))
    return fiber_product_gamma(h_group, x, y)


def table_gamma(path: Path) -> MarkedGamma:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TableFormatError(f"cannot read group table {path}: {exc}") from exc
    return load_marked_gamma(text)


def level_gamma(spec: ProductSpec) -> MarkedGamma:
    """The marked group of the finite level; the lamplighter only has Gamma_0 = A x B."""
    if spec.kind == "s3_fiber":
        return s3_fiber()
    if spec.kind == "a5_fiber":
        return a5_fiber()
    if spec.kind == "table" and spec.table is not None:
        return table_gamma(spec.table)
    return base_gamma()


@lru_cache(maxsize=32)
def build_delta(spec: ProductSpec, kappa: int) -> DeltaGroup:
    if spec.kind == "lamplighter":
        return DeltaGroup(DeltaParams.lamplighter(kappa))
    return DeltaGroup(DeltaParams.build(kappa, [(spec.k1, level_gamma(spec))]))


__all__ = ["a5_fiber", "build_delta", "level_gamma", "s3_fiber", "table_gamma"]
