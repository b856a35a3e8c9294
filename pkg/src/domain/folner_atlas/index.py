"""Folner indices (n, i, j), their successor order and exact cardinalities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from ..delta_core import DeltaParams, DeltaShape
from .chains import SubsetChain, abstract_chain, base_chain, concrete_chain
from .errors import ChainSearchError, FolnerIndexError

MAX_CHAIN_STEPS = 100_000


@dataclass(frozen=True, slots=True, order=True)
class FolnerIndex:
    n: int
    i: int = 0
    j: int = 1

    def __str__(self) -> str:
        return f"({self.n},{self.i},{self.j})"


@dataclass(frozen=True)
class FolnerFamily:
    """The refined Folner family F_{n,i,j} of one diagonal product.

    Built from a ``DeltaShape`` so that abstract shapes, where only |Gamma'_m|
    is known, share the cardinality machinery with concrete products.
    """

    shape: DeltaShape
    chains: tuple[SubsetChain, ...]

    @classmethod
    def of(cls, params: DeltaParams) -> FolnerFamily:
        chains = (
            base_chain(),
            *(concrete_chain(m, level.gamma) for m, level in enumerate(params.levels, start=1)),
        )
        return cls(params.shape(), chains)

    @classmethod
    def abstract(cls, shape: DeltaShape) -> FolnerFamily:
        chains = (
            base_chain(),
            *(abstract_chain(m, shape.prime_orders[m]) for m in range(1, shape.depth + 1)),
        )
        return cls(shape, chains)

    @property
    def q(self) -> int:
        return self.shape.q

    def top_level(self, n: int) -> int:
        """l(n - 1): the highest level allowed to carry derived data in F_n."""
        return self.shape.level_index(n - 1)

    def steps(self, i: int) -> int:
        return self.chains[i].steps

    def validate(self, idx: FolnerIndex) -> FolnerIndex:
        if idx.n < 1:
            raise FolnerIndexError("n must be at least 1", n=idx.n, i=idx.i, j=idx.j)
        if not 0 <= idx.i <= self.top_level(idx.n):
            raise FolnerIndexError(
                f"level must lie in [0, {self.top_level(idx.n)}]", n=idx.n, i=idx.i, j=idx.j
            )
        if not 1 <= idx.j <= self.steps(idx.i):
            raise FolnerIndexError(
                f"stage must lie in [1, {self.steps(idx.i)}]", n=idx.n, i=idx.i, j=idx.j
            )
        return idx

    def first(self, n: int) -> FolnerIndex:
        return FolnerIndex(n, 0, 1)

    def last(self, n: int) -> FolnerIndex:
        """Index of F_n, the set of elements with range inside [0, n - 1]."""
        top = self.top_level(n)
        return FolnerIndex(n, top, self.steps(top))

    def successor(self, idx: FolnerIndex) -> FolnerIndex:
        self.validate(idx)
        if idx.j < self.steps(idx.i):
            return FolnerIndex(idx.n, idx.i, idx.j + 1)
        if idx.i < self.top_level(idx.n):
            return FolnerIndex(idx.n, idx.i + 1, 1)
        return FolnerIndex(idx.n + 1, 0, 1)

    def predecessor(self, idx: FolnerIndex) -> FolnerIndex | None:
        self.validate(idx)
        if idx.j > 1:
            return FolnerIndex(idx.n, idx.i, idx.j - 1)
        if idx.i > 0:
            return FolnerIndex(idx.n, idx.i - 1, self.steps(idx.i - 1))
        if idx.n > 1:
            return self.last(idx.n - 1)
        return None

    def walk(self, start: FolnerIndex | None = None) -> Iterator[FolnerIndex]:
        """Indices in successor order; the stream never ends on its own."""
        idx = self.validate(start or self.first(1))
        while True:
            yield idx
            idx = self.successor(idx)

    def exponents(self, idx: FolnerIndex) -> list[int]:
        """Number of free derived sites per level m >= 1, level i counted without site n - 1."""
        n, i = idx.n, idx.i
        top = self.top_level(n)
        return [
            n - self.shape.k[m] if m < i else n - self.shape.k[m] - 1 for m in range(1, top + 1)
        ]

    def cardinality(self, idx: FolnerIndex) -> int:
        """n q^n prod_{m<i} |Gamma'_m|^(n-k_m) |L^(i)_j| prod_{m>=i} |Gamma'_m|^(n-k_m-1)."""
        self.validate(idx)
        value = idx.n * self.q**idx.n * self.chains[idx.i].size(idx.j)
        for m, exponent in enumerate(self.exponents(idx), start=1):
            value *= self.shape.prime_orders[m] ** exponent
        return value

    def ln_cardinality(self, idx: FolnerIndex) -> float:
        self.validate(idx)
        value = math.log(idx.n) + idx.n * math.log(self.q)
        value += math.log(self.chains[idx.i].size(idx.j))
        for m, exponent in enumerate(self.exponents(idx), start=1):
            value += exponent * math.log(self.shape.prime_orders[m])
        return value

    def first_at_least(self, size: int, *, max_steps: int | None = None) -> FolnerIndex:
        """First index in successor order with |F| >= size."""
        limit = MAX_CHAIN_STEPS if max_steps is None else max_steps
        for steps, idx in enumerate(self.walk()):
            if steps > limit:
                break
            if self.cardinality(idx) >= size:
                return idx
        raise ChainSearchError(
            f"no Folner set of size >= {size} within {limit} chain steps", size=size, steps=limit
        )

    def chain_ratios_ok(self, n_max: int) -> bool:
        """2 |F| <= |F_next| <= 2q |F| at every successor step with n <= n_max."""
        idx = self.first(1)
        current = self.cardinality(idx)
        while idx.n <= n_max:
            nxt = self.successor(idx)
            following = self.cardinality(nxt)
            if not 2 * current <= following <= 2 * self.q * current:
                return False
            idx, current = nxt, following
        return True


__all__ = ["FolnerFamily", "FolnerIndex"]
