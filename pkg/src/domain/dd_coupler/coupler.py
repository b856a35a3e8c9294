"""The injection iota_n from G_n into H_n = K_n minus a corner, assembled from its parts."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..delta_core import DeltaElement, DeltaGroup
from ..folner_atlas import FolnerFamily
from ..z_coupler import ZEncoder
from .cursor import CursorLayout
from .errors import InjectionConsistencyError
from .numbering import SourceNumbering, SpreadingMap, TargetNumbering
from .target import TargetIndex, find_target_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CarvedCorner:
    """Elements (g, v) of K_n with theta(g) >= theta_min and chi(v) >= chi_min.

    The triple map never reaches E = max E with P above the last filled block,
    so these elements stay outside the image of the injection.
    """

    theta_min: int
    chi_min: int
    removed: int
    bound: int

    @property
    def empty(self) -> bool:
        return self.removed == 0

    @property
    def within_bound(self) -> bool:
        return self.removed <= self.bound


def carve_corner(
    index: TargetIndex,
    layout: CursorLayout,
    source: SourceNumbering,
    target: TargetNumbering,
    spreading: SpreadingMap,
) -> CarvedCorner:
    q = source.encoder.q
    theta_min = spreading(q**index.width * source.max_E)
    chi_min = index.width * (source.max_mu - index.Q * source.max_E + 1)
    cursors = sum(1 for v in range(index.D) if layout.chi(v) >= chi_min)
    removed = cursors * max(0, target.max_theta - theta_min + 1)
    return CarvedCorner(
        theta_min=theta_min,
        chi_min=chi_min,
        removed=removed,
        bound=index.D * q ** (3 + index.width),
    )


@dataclass(frozen=True)
class DDCoupler:
    """iota_n(x) = (vartheta_decode(s(theta_tilde(x)), u(P(x), t)), u(P(x), t))."""

    source: DeltaGroup
    target: DeltaGroup
    encoder: ZEncoder
    target_family: FolnerFamily
    index: TargetIndex
    layout: CursorLayout
    source_numbering: SourceNumbering
    target_numbering: TargetNumbering
    spreading: SpreadingMap
    corner: CarvedCorner

    @classmethod
    def build(
        cls,
        source: DeltaGroup,
        target: DeltaGroup,
        n: int,
        *,
        max_steps: int | None = None,
    ) -> DDCoupler:
        encoder = ZEncoder.build(source, n)
        target_family = FolnerFamily.of(target.params)
        index = find_target_index(encoder.family, target_family, n, max_steps=max_steps)
        layout = CursorLayout(index.width, index.Q, index.R)
        source_numbering = SourceNumbering(encoder, index.Q)
        target_numbering = TargetNumbering.build(target, target_family, index, layout)
        spreading = SpreadingMap.build(source_numbering.max_theta, target_numbering.max_theta)
        corner = carve_corner(index, layout, source_numbering, target_numbering, spreading)
        logger.info(
            "ddcoupling build n=%s source_size=%s target_size=%s a=%s b=%s removed=%s",
            n,
            index.source_size,
            index.target_size,
            spreading.a,
            spreading.b,
            corner.removed,
        )
        return cls(
            source,
            target,
            encoder,
            target_family,
            index,
            layout,
            source_numbering,
            target_numbering,
            spreading,
            corner,
        )

    @property
    def n(self) -> int:
        return self.index.n

    @property
    def density_constant(self) -> int:
        """2 kappa^2 + 1."""
        return 2 * self.index.kappa**2 + 1

    @property
    def h_size(self) -> int:
        return self.index.target_size - self.corner.removed

    @property
    def proportional(self) -> bool:
        """|G_n| <= |K_n| <= 4 q^2 |G_n|."""
        size = self.index.source_size
        return size <= self.index.target_size <= 4 * self.encoder.q**2 * size

    def in_corner(self, y: DeltaElement) -> bool:
        if self.corner.empty or self.layout.chi(y.t) < self.corner.chi_min:
            return False
        return self.target_numbering.theta_any(y) >= self.corner.theta_min

    def h_contains(self, y: DeltaElement) -> bool:
        return self.target_numbering.template.contains(y) and not self.in_corner(y)

    def h_elements(self) -> Iterator[DeltaElement]:
        for y in self.target_numbering.template.elements():
            if not self.in_corner(y):
                yield y

    def cursor_of(self, x: DeltaElement) -> int:
        _, P = self.source_numbering.extract_EP(x)
        return self.layout.u(P, x.t)

    def inject(self, x: DeltaElement) -> DeltaElement:
        v = self.cursor_of(x)
        z = self.spreading(self.source_numbering.theta_tilde(x))
        y = self.target_numbering.vartheta_decode(z, v)
        if self.in_corner(y):
            raise InjectionConsistencyError(
                "injected element lies in the carved corner", n=self.n, element=x
            )
        return y


def density_radius(
    coupler: DDCoupler, image: Iterable[DeltaElement], *, limit: int | None = None
) -> int | None:
    """Largest distance from a point of H_n to the image, walking inside K_n.

    ``None`` when some point of H_n is not reached within ``limit`` steps.
    """
    delta = coupler.target
    template = coupler.target_numbering.template
    distances = {y: 0 for y in image}
    queue = deque(distances)
    labels = delta.generator_labels
    while queue:
        current = queue.popleft()
        depth = distances[current]
        if limit is not None and depth >= limit:
            continue
        for label in labels:
            nxt = delta.apply_generator(current, label)
            if nxt in distances or not template.contains(nxt):
                continue
            distances[nxt] = depth + 1
            queue.append(nxt)
    radius = 0
    for y in coupler.h_elements():
        found = distances.get(y)
        if found is None:
            logger.info("ddcoupling density unreachable n=%s", coupler.n)
            return None
        radius = max(radius, found)
    return radius


__all__ = ["CarvedCorner", "DDCoupler", "carve_corner", "density_radius"]
