"""Builder helpers to express test inputs succinctly."""

from __future__ import annotations

from functools import lru_cache

from src.application.instances import a5_fiber, s3_fiber
from src.domain.delta_core import DeltaGroup, DeltaParams

__all__ = [
    "a5_delta",
    "a5_fiber",
    "commutator_word",
    "lamplighter_delta",
    "s3_delta",
    "s3_fiber",
]


def lamplighter_delta(kappa: int = 3) -> DeltaGroup:
    """(Z/2 x Z/3) wr Z: every level past 0 truncated."""
    return DeltaGroup(DeltaParams.lamplighter(kappa))


@lru_cache(maxsize=None)
def s3_delta(k1: int = 2, kappa: int = 3) -> DeltaGroup:
    """One finite level at k_1 marked by the S3 fiber product (|Gamma'_1| = 3)."""
    return DeltaGroup(DeltaParams.build(kappa, [(k1, s3_fiber())]))


@lru_cache(maxsize=None)
def a5_delta(k1: int = 2, kappa: int = 3) -> DeltaGroup:
    """One finite level at k_1 marked by the A5 fiber product (|Gamma'_1| = 60)."""
    return DeltaGroup(DeltaParams.build(kappa, [(k1, a5_fiber())]))


def commutator_word(k1: int) -> list[str]:
    """(f, 0) b (f, 0)^-1 b^-1 with f an A-lamp at site k_1."""
    f = ["cursor+"] * k1 + ["a1"] + ["cursor-"] * k1
    return f + ["b1"] + f + ["b2"]
