"""Finite groups as multiplication tables over dense element ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import GroupTableError, UnreachableElementError

EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 512
Permutation = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class FiniteGroup:
    """A group given by its Cayley table; ``table[g][h]`` is the id of g*h.

    Construction checks the Latin-square and identity laws and derives the
    inverse table. Associativity is checked separately by ``check_associativity``.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[Hashable, ...] | None = None
    inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _ids: dict[Hashable, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        order = len(table)
        if order == 0:
            raise GroupTableError("a group needs at least one element", law="nonempty")
        full = set(range(order))
        for g, row in enumerate(table):
            if len(row) != order or set(row) != full:
                raise GroupTableError(
                    f"row {g} is not a permutation of the ids", law="latin", witness=(g,)
                )
        e = self.identity
        if not 0 <= e < order:
            raise GroupTableError("identity id out of range", law="identity", witness=(e,))
        for g in range(order):
            if table[e][g] != g or table[g][e] != g:
                raise GroupTableError(f"identity law fails at {g}", law="identity", witness=(g,))
        inverse = tuple(table[g].index(e) for g in range(order))
        for g in range(order):
            if table[inverse[g]][g] != e:
                raise GroupTableError(f"inverse law fails at {g}", law="inverse", witness=(g,))
        if self.labels is not None and len(self.labels) != order:
            raise GroupTableError("label count must equal the order", law="labels")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "inverse", inverse)
        ids = {} if self.labels is None else {label: i for i, label in enumerate(self.labels)}
        object.__setattr__(self, "_ids", ids)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def product(self, elements: Iterable[int]) -> int:
        result = self.identity
        for g in elements:
            result = self.table[result][g]
        return result

    def power(self, g: int, exponent: int) -> int:
        if exponent < 0:
            g, exponent = self.inverse[g], -exponent
        result = self.identity
        for _ in range(exponent):
            result = self.table[result][g]
        return result

    def element_order(self, g: int) -> int:
        current, count = g, 1
        while current != self.identity:
            current = self.table[current][g]
            count += 1
        return count

    def conjugate(self, g: int, by: int) -> int:
        """Return by * g * by^-1."""
        return self.table[self.table[by][g]][self.inverse[by]]

    def commutator(self, g: int, h: int) -> int:
        """Return g h g^-1 h^-1."""
        t = self.table
        return t[t[t[g][h]][self.inverse[g]]][self.inverse[h]]

    def label(self, g: int) -> Hashable:
        return g if self.labels is None else self.labels[g]

    def id_of(self, label: Hashable) -> int:
        if self.labels is None:
            return int(label)  # type: ignore[arg-type]
        return self._ids[label]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)


def check_associativity(
    group: FiniteGroup, *, samples: int = 200_000, rng: np.random.Generator | None = None
) -> None:
    """Verify (ab)c = a(bc): exhaustively up to order 512, on random triples above."""
    t = group.as_array()
    n = group.order
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            # lhs[b, c] = (a b) c, rhs[b, c] = a (b c)
            lhs = t[t[a]]
            rhs = t[a][t]
            if not np.array_equal(lhs, rhs):
                b, c = (int(v) for v in np.argwhere(lhs != rhs)[0])
                raise GroupTableError("associativity fails", law="associativity", witness=(a, b, c))
        return
    rng = rng or np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, samples))
    bad = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
    if bad.size:
        i = int(bad[0])
        raise GroupTableError(
            "associativity fails", law="associativity", witness=(int(a[i]), int(b[i]), int(c[i]))
        )


def compose(g: Permutation, h: Permutation) -> Permutation:
    """(g h)(i) = g(h(i))."""
    return tuple(g[i] for i in h)


def perm_from_cycles(degree: int, *cycles: Sequence[int]) -> Permutation:
    """Permutation of {0..degree-1} from 1-based cycles, e.g. ``perm_from_cycles(3, (1, 2))``."""
    image = list(range(degree))
    for cycle in cycles:
        for position, point in enumerate(cycle):
            image[point - 1] = cycle[(position + 1) % len(cycle)] - 1
    return tuple(image)


def closure_group(
    generators: Sequence[Hashable],
    identity: Hashable,
    multiply: Callable[[Hashable, Hashable], Hashable],
) -> FiniteGroup:
    """Subgroup generated by ``generators`` under ``multiply``, identity first, BFS order."""
    labels: list[Hashable] = [identity]
    ids: dict[Hashable, int] = {identity: 0}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in generators:
            nxt = multiply(current, gen)
            if nxt not in ids:
                ids[nxt] = len(labels)
                labels.append(nxt)
                queue.append(nxt)
    table = tuple(tuple(ids[multiply(g, h)] for h in labels) for g in labels)
    return FiniteGroup(table, 0, tuple(labels))


def permutation_group(degree: int, generators: Sequence[Permutation]) -> FiniteGroup:
    return closure_group(list(generators), tuple(range(degree)), compose)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((g + h) % n for h in range(n)) for g in range(n)))


def direct_product(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup:
    """Pairs (g, h) with id g * |right| + h."""
    m = right.order
    table = tuple(
        tuple(
            left.mul(g1, g2) * m + right.mul(h1, h2)
            for g2 in range(left.order)
            for h2 in range(m)
        )
        for g1 in range(left.order)
        for h1 in range(m)
    )
    labels = tuple((left.label(g), right.label(h)) for g in range(left.order) for h in range(m))
    return FiniteGroup(table, left.identity * m + right.identity, labels)


def symmetric_group(degree: int) -> FiniteGroup:
    if degree < 2:
        return permutation_group(max(degree, 1), [])
    return permutation_group(
        degree,
        [perm_from_cycles(degree, (1, 2)), perm_from_cycles(degree, tuple(range(1, degree + 1)))],
    )


def alternating_group(degree: int) -> FiniteGroup:
    """Generated by the 3-cycles (1 2 k)."""
    gens = [perm_from_cycles(degree, (1, 2, k)) for k in range(3, degree + 1)]
    return permutation_group(degree, gens)


def subgroup_closure(group: FiniteGroup, generators: Iterable[int]) -> frozenset[int]:
    gens = tuple(set(generators))
    reached = {group.identity}
    queue = deque([group.identity])
    while queue:
        current = queue.popleft()
        for gen in gens:
            nxt = group.mul(current, gen)
            if nxt not in reached:
                reached.add(nxt)
                queue.append(nxt)
    return frozenset(reached)


def normal_closure(group: FiniteGroup, elements: Iterable[int]) -> frozenset[int]:
    """Smallest normal subgroup containing ``elements``."""
    seeds = set(elements)
    conjugates = {group.conjugate(s, c) for s in seeds for c in range(group.order)}
    return subgroup_closure(group, conjugates)


def is_normal(group: FiniteGroup, subgroup: Iterable[int]) -> bool:
    members = frozenset(subgroup)
    return all(group.conjugate(s, c) in members for s in members for c in range(group.order))


def word_lengths(
    group: FiniteGroup, gens: Iterable[int], *, symmetric: bool = False
) -> tuple[int, ...]:
    """BFS word length of every element over ``gens`` (and their inverses when symmetric)."""
    steps = set(gens)
    if symmetric:
        steps |= {group.inv(g) for g in steps}
    distance = [-1] * group.order
    distance[group.identity] = 0
    queue = deque([group.identity])
    reached = 1
    while queue:
        current = queue.popleft()
        for gen in steps:
            nxt = group.mul(current, gen)
            if distance[nxt] < 0:
                distance[nxt] = distance[current] + 1
                reached += 1
                queue.append(nxt)
    if reached != group.order:
        raise UnreachableElementError(
            "generating set does not reach every element", reached=reached, order=group.order
        )
    return tuple(distance)


def diameter(group: FiniteGroup, gens: Iterable[int], *, symmetric: bool = False) -> int:
    return max(word_lengths(group, gens, symmetric=symmetric))


__all__ = [
    "FiniteGroup",
    "Permutation",
    "alternating_group",
    "check_associativity",
    "closure_group",
    "compose",
    "cyclic_group",
    "diameter",
    "direct_product",
    "is_normal",
    "normal_closure",
    "perm_from_cycles",
    "permutation_group",
    "subgroup_closure",
    "symmetric_group",
    "word_lengths",
]
