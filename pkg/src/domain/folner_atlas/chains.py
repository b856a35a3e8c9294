"""Nested subset chains {e} = L_0 < L_1 < ... < L_N = Gamma' with doubling ratios."""

from __future__ import annotations

from dataclasses import dataclass

from ..group_kernel import MarkedGamma


def _ceil_power_root(base: int, numerator: int, degree: int) -> int:
    """Smallest s with s^degree >= base^numerator."""
    target = base**numerator
    lo, hi = 1, 1 << -(-target.bit_length() // degree)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**degree >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def chain_sizes(order: int) -> tuple[int, ...]:
    """Sizes s_0 = 1 < s_1 < ... < s_N = order.

    N is the largest integer with 2^N <= order; s_j = max(2 s_{j-1},
    ceil(order^(j/N))) clamped to order // 2^(N-j). Consecutive ratios then lie
    in [2, 4).
    """
    if order < 1:
        raise ValueError("a chain needs a nonempty group")
    if order == 1:
        return (1,)
    steps = order.bit_length() - 1
    if order == 1 << steps:
        return tuple(1 << j for j in range(steps + 1))
    sizes = [1]
    for j in range(1, steps + 1):
        wanted = max(2 * sizes[-1], _ceil_power_root(order, j, steps))
        sizes.append(min(wanted, order >> (steps - j)))
    return tuple(sizes)


@dataclass(frozen=True, slots=True)
class SubsetChain:
    """Chain of level ``level``; ``elements`` is the BFS-ordered Gamma' when concrete.

    L_j is the prefix of ``elements`` of length ``sizes[j]``. Level 0 carries the
    single step L_1 = Gamma_0, counted with weight one since Gamma'_0 is trivial.
    """

    level: int
    sizes: tuple[int, ...]
    elements: tuple[int, ...] | None = None

    @property
    def steps(self) -> int:
        """N_i."""
        return max(len(self.sizes) - 1, 1)

    def size(self, j: int) -> int:
        if self.level == 0:
            return 1
        return self.sizes[j]

    def members(self, j: int) -> tuple[int, ...]:
        if self.elements is None:
            raise ValueError(f"chain of level {self.level} carries cardinalities only")
        return self.elements[: self.size(j)]

    def ratios_ok(self, q: int) -> bool:
        return all(2 * a <= b <= 2 * q * a for a, b in zip(self.sizes, self.sizes[1:]))


def base_chain() -> SubsetChain:
    return SubsetChain(0, (1, 1))


def abstract_chain(level: int, prime_order: int) -> SubsetChain:
    return SubsetChain(level, chain_sizes(prime_order))


def concrete_chain(level: int, gamma: MarkedGamma) -> SubsetChain:
    """Prefixes of Gamma' ordered by word length then id."""
    return SubsetChain(level, chain_sizes(gamma.prime_order), gamma.gamma_prime)


__all__ = [
    "SubsetChain",
    "abstract_chain",
    "base_chain",
    "chain_sizes",
    "concrete_chain",
]
