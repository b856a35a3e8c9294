"""Level data of a diagonal product: scales k_m, marked groups and diameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..group_kernel import MarkedGamma, base_gamma
from .errors import DeltaParamsError


def _is_power_of(value: int, kappa: int) -> bool:
    while value > 1 and value % kappa == 0:
        value //= kappa
    return value == 1


def _level_index(k: Sequence[int], n: int) -> int:
    if n < 0:
        raise DeltaParamsError("level index is defined for n >= 0", field="n", value=n)
    index = 0
    for m, k_m in enumerate(k):
        if k_m <= n:
            index = m
    return index


@dataclass(frozen=True, slots=True)
class DeltaLevel:
    k: int
    gamma: MarkedGamma


@dataclass(frozen=True, slots=True)
class DeltaShape:
    """Cardinality view of a diagonal product.

    ``k``, ``l`` and ``prime_orders`` are indexed by level, level 0 included
    (k_0 = 0, l_0 = 1, |Gamma'_0| = 1). Levels past the last entry behave as
    k_m = infinity.
    """

    kappa: int
    q: int
    k: tuple[int, ...]
    l: tuple[int, ...]
    prime_orders: tuple[int, ...]

    @classmethod
    def from_sequences(
        cls, kappa: int, q: int, k: Sequence[int], l: Sequence[int]
    ) -> DeltaShape:
        """Abstract shape with |Gamma'_m| = 2^{l_m} for every m >= 1."""
        if len(k) != len(l) or not k or k[0] != 0:
            raise DeltaParamsError("k and l must have equal length and start at k_0 = 0", field="k")
        primes = (1, *(2 ** int(l_m) for l_m in l[1:]))
        return cls(kappa, q, tuple(int(v) for v in k), tuple(int(v) for v in l), primes)

    @property
    def depth(self) -> int:
        return len(self.k) - 1

    def level_index(self, n: int) -> int:
        """max{m : k_m <= n} over the finite levels."""
        return _level_index(self.k, n)


@dataclass(frozen=True, slots=True)
class DeltaParams:
    """A truncated diagonal product: Gamma_0 = A x B at k_0 = 0, then finite levels m >= 1."""

    kappa: int
    base: MarkedGamma
    levels: tuple[DeltaLevel, ...]

    def __post_init__(self) -> None:
        if self.kappa < 3:
            raise DeltaParamsError("kappa must be at least 3", field="kappa", value=self.kappa)
        if self.base.prime_order != 1:
            raise DeltaParamsError("Gamma_0 must equal A x B", field="base")
        previous = 0
        for m, level in enumerate(self.levels, start=1):
            if level.k <= previous or level.k < 2 * previous:
                raise DeltaParamsError(
                    f"k_{m} must exceed and at least double k_{m - 1}", field="k", value=level.k
                )
            if level.gamma.prime_order < 2:
                raise DeltaParamsError(
                    f"Gamma'_{m} must be nontrivial", field="gamma_prime", value=m
                )
            if (level.gamma.a_order, level.gamma.b_order) != (
                self.base.a_order,
                self.base.b_order,
            ):
                raise DeltaParamsError(
                    f"level {m} is marked by groups of different orders", field="marking", value=m
                )
            previous = level.k

    @classmethod
    def build(
        cls,
        kappa: int,
        levels: Sequence[tuple[int, MarkedGamma]] = (),
        *,
        base: MarkedGamma | None = None,
    ) -> DeltaParams:
        if base is None:
            first = levels[0][1] if levels else None
            base = base_gamma(first.a_order, first.b_order) if first else base_gamma()
        return cls(kappa, base, tuple(DeltaLevel(k, gamma) for k, gamma in levels))

    @classmethod
    def lamplighter(cls, kappa: int, a_order: int = 2, b_order: int = 3) -> DeltaParams:
        """Every k_m = infinity for m >= 1: Delta is (A x B) wr Z."""
        return cls(kappa, base_gamma(a_order, b_order), ())

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def a_order(self) -> int:
        return self.base.a_order

    @property
    def b_order(self) -> int:
        return self.base.b_order

    @property
    def k_seq(self) -> tuple[int, ...]:
        return (0, *(level.k for level in self.levels))

    @property
    def l_seq(self) -> tuple[int, ...]:
        return (1, *(level.gamma.diameter_l for level in self.levels))

    @property
    def k_are_kappa_powers(self) -> bool:
        return all(_is_power_of(level.k, self.kappa) for level in self.levels)

    def gamma(self, m: int) -> MarkedGamma:
        return self.base if m == 0 else self.levels[m - 1].gamma

    def k(self, m: int) -> int:
        return 0 if m == 0 else self.levels[m - 1].k

    def level_index(self, n: int) -> int:
        return _level_index(self.k_seq, n)

    def shape(self) -> DeltaShape:
        return DeltaShape(
            self.kappa,
            self.q,
            self.k_seq,
            self.l_seq,
            (1, *(level.gamma.prime_order for level in self.levels)),
        )


__all__ = ["DeltaLevel", "DeltaParams", "DeltaShape"]
