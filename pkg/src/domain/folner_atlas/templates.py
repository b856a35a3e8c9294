"""Support templates of F_{n,i,j}: membership, enumeration, sampling and boundaries."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from ..delta_core import DeltaElement, DeltaGroup
from .errors import EnumerationBudgetError
from .index import FolnerFamily, FolnerIndex

logger = logging.getLogger(__name__)

Slot = tuple[int, tuple[int, ...]]


@dataclass(frozen=True, slots=True)
class FolnerTemplate:
    """Allowed values per site: f0 on [0, n - 1] and f'_m per level.

    ``slots[m - 1]`` lists (site, allowed Gamma'_m ids) with the identity first.
    Sites missing from a level must carry the identity.
    """

    index: FolnerIndex
    f0_values: tuple[int, ...]
    f0_identity: int
    slots: tuple[tuple[Slot, ...], ...]
    identities: tuple[int, ...]
    cardinality: int

    @property
    def n(self) -> int:
        return self.index.n

    def contains(self, x: DeltaElement) -> bool:
        if not 0 <= x.t < self.n:
            return False
        if any(not 0 <= s < self.n for s, _ in x.f0):
            return False
        for level, allowed in zip(x.fprime, self.slots):
            table = dict(allowed)
            for site, value in level:
                if value not in table.get(site, ()):
                    return False
        return all(not level for level in x.fprime[len(self.slots) :])

    def _free(self) -> list[tuple[int, int, tuple[int, ...]]]:
        return [
            (m, site, values)
            for m, level in enumerate(self.slots, start=1)
            for site, values in level
            if len(values) > 1
        ]

    def elements(self) -> Iterator[DeltaElement]:
        depth = len(self.identities)
        free = self._free()
        f0_sites = range(self.n)
        for t in range(self.n):
            for f0 in product(self.f0_values, repeat=self.n):
                f0_pairs = tuple((s, v) for s, v in zip(f0_sites, f0) if v != self.f0_identity)
                for choice in product(*(values for _, _, values in free)):
                    levels: list[list[tuple[int, int]]] = [[] for _ in range(depth)]
                    for (m, site, _), value in zip(free, choice):
                        if value != self.identities[m - 1]:
                            levels[m - 1].append((site, value))
                    yield DeltaElement(t, f0_pairs, tuple(tuple(level) for level in levels))

    def random_element(self, rng: np.random.Generator) -> DeltaElement:
        t = int(rng.integers(self.n))
        f0 = tuple(
            (s, v)
            for s in range(self.n)
            if (v := self.f0_values[int(rng.integers(len(self.f0_values)))]) != self.f0_identity
        )
        levels: list[list[tuple[int, int]]] = [[] for _ in self.identities]
        for m, site, values in self._free():
            value = values[int(rng.integers(len(values)))]
            if value != self.identities[m - 1]:
                levels[m - 1].append((site, value))
        return DeltaElement(t, f0, tuple(tuple(level) for level in levels))


def folner_template(delta: DeltaGroup, family: FolnerFamily, idx: FolnerIndex) -> FolnerTemplate:
    """Template of F_{n,i,j}.

    Levels m < i use every site of [k_m, n - 1]; level i uses [k_i, n - 2] freely
    and L^(i)_j at site n - 1; levels above i stop at n - 2; levels past l(n - 1)
    stay trivial.
    """
    cardinality = family.cardinality(idx)
    n, i, j = idx.n, idx.i, idx.j
    top = family.top_level(n)
    params = delta.params
    slots: list[tuple[Slot, ...]] = []
    for m in range(1, params.depth + 1):
        if m > top:
            slots.append(())
            continue
        gamma = params.gamma(m)
        full = gamma.gamma_prime
        last = n - 1 if m < i else n - 2
        level = [(site, full) for site in range(params.k(m), last + 1)]
        if m == i:
            level.append((n - 1, family.chains[m].members(j)))
        slots.append(tuple(level))
    base = params.base
    return FolnerTemplate(
        index=idx,
        f0_values=tuple(range(base.order)),
        f0_identity=base.gamma.identity,
        slots=tuple(slots),
        identities=tuple(params.gamma(m).gamma.identity for m in range(1, params.depth + 1)),
        cardinality=cardinality,
    )


def enumerate_folner(
    delta: DeltaGroup, family: FolnerFamily, idx: FolnerIndex, budget: int
) -> Iterator[DeltaElement]:
    """Stream every element of F_{n,i,j}; refuses when |F| exceeds ``budget``."""
    template = folner_template(delta, family, idx)
    if template.cardinality > budget:
        raise EnumerationBudgetError(
            f"|F{idx}| = {template.cardinality} exceeds the enumeration budget",
            cardinality=template.cardinality,
            budget=budget,
        )
    logger.info("folner enumerate index=%s size=%s", idx, template.cardinality)
    return template.elements()


def folner_boundary(
    delta: DeltaGroup, template: FolnerTemplate, elements: Iterable[DeltaElement]
) -> list[DeltaElement]:
    """Elements x with x s outside F for some generator s."""
    labels = delta.generator_labels
    return [
        x
        for x in elements
        if any(not template.contains(delta.apply_generator(x, s)) for s in labels)
    ]


def boundary_law_holds(template: FolnerTemplate, boundary: Iterable[DeltaElement]) -> bool:
    """The boundary is exactly the set of elements with cursor at 0 or n - 1."""
    edge = {0, template.n - 1}
    observed = list(boundary)
    expected = template.cardinality * len(edge) // template.n
    return all(x.t in edge for x in observed) and len(observed) == expected


def lamp_closure_exceptions(
    delta: DeltaGroup, template: FolnerTemplate, elements: Iterable[DeltaElement]
) -> int:
    """Number of (x, lamp) pairs leaving F."""
    lamps = delta.lamp_labels
    return sum(
        1 for x in elements for s in lamps if not template.contains(delta.apply_generator(x, s))
    )


def derived_change_count(delta: DeltaGroup, elements: Iterable[DeltaElement]) -> int:
    """Number of (x, lamp) pairs whose right multiplication changes some f'_m."""
    lamps = delta.lamp_labels
    return sum(1 for x in elements for s in lamps if delta.apply_generator(x, s).fprime != x.fprime)


__all__ = [
    "FolnerTemplate",
    "boundary_law_holds",
    "derived_change_count",
    "enumerate_folner",
    "folner_boundary",
    "folner_template",
    "lamp_closure_exceptions",
]
