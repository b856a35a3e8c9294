"""Location of G_n inside the refined Folner chain of the target product."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..folner_atlas import FolnerFamily, FolnerIndex
from .errors import CouplingIndexError

logger = logging.getLogger(__name__)


def power_exponent(kappa: int, value: int) -> int:
    """Smallest p with value <= kappa^p, so kappa^(p-1) < value when value > 1."""
    p, power = 0, 1
    while power < value:
        p += 1
        power *= kappa
    return p


@dataclass(frozen=True, slots=True)
class TargetIndex:
    """Sandwich |F_{d,i,j-1}| < |G_n| <= |F_{d,i,j}| and the derived target K_n = F_{D,I,J}."""

    n: int
    kappa: int
    source_size: int
    sandwich: FolnerIndex
    target: FolnerIndex
    below: int
    above: int
    target_size: int
    Q: int
    R: int
    p: int
    M: int

    @property
    def width(self) -> int:
        return self.kappa**self.n

    @property
    def D(self) -> int:
        return self.target.n

    @property
    def I(self) -> int:  # noqa: E743
        return self.target.i

    @property
    def J(self) -> int:
        return self.target.j

    @property
    def q_at_least_three(self) -> bool:
        return self.Q >= 3

    @property
    def d_above_width(self) -> bool:
        return self.D > self.width


def derived_levels(family: FolnerFamily, idx: FolnerIndex) -> int:
    """M_n: levels of F_{D,I,J} that keep at least one free derived site."""
    top = family.top_level(idx.n)
    if top >= 1 and family.shape.k[top] == idx.n - 1 and idx.i < top:
        return top - 1
    return top


def find_target_index(
    source: FolnerFamily, target: FolnerFamily, n: int, *, max_steps: int | None = None
) -> TargetIndex:
    """Walk the target chain to the first F with |F| >= |G_n|, then step once more."""
    if source.shape.kappa != target.shape.kappa:
        raise CouplingIndexError("source and target must share kappa", n=n)
    kappa = source.shape.kappa
    width = kappa**n
    source_size = source.cardinality(source.last(width))
    sandwich = target.first_at_least(source_size, max_steps=max_steps)
    previous = target.predecessor(sandwich)
    idx = target.successor(sandwich)
    Q, R = divmod(idx.n, width)
    if Q == 0:
        raise CouplingIndexError(
            f"D_n = {idx.n} is smaller than kappa^n = {width}", n=n, size=source_size
        )
    index = TargetIndex(
        n=n,
        kappa=kappa,
        source_size=source_size,
        sandwich=sandwich,
        target=idx,
        below=0 if previous is None else target.cardinality(previous),
        above=target.cardinality(sandwich),
        target_size=target.cardinality(idx),
        Q=Q,
        R=R,
        p=power_exponent(kappa, idx.n),
        M=derived_levels(target, idx),
    )
    logger.info(
        "ddcoupling target n=%s sandwich=%s target=%s Q=%s R=%s p=%s M=%s",
        n,
        sandwich,
        idx,
        Q,
        R,
        index.p,
        index.M,
    )
    return index


__all__ = ["TargetIndex", "derived_levels", "find_target_index", "power_exponent"]
