"""Numberings on both sides of the injection and the spreading map between them.

The source side reuses the Z encoder's window numberings and splits its
derived packing mu as E Q + P. The target side numbers lamp configurations in a
base that depends on the block (P, t) of the cursor.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..delta_core import DeltaElement, DeltaGroup
from ..folner_atlas import FolnerFamily, FolnerTemplate, folner_template
from ..mixed_radix import (
    CarrySaturationError,
    DigitVector,
    MixedRadixBase,
    addition_locality_holds,
    carry_index,
    decompose,
    recompose,
)
from ..z_coupler import ZEncoder
from .cursor import CursorLayout, TargetBlocks, target_blocks
from .errors import (
    CursorMapError,
    InjectionConsistencyError,
    SpreadingError,
    TargetDomainError,
)
from .target import TargetIndex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SourceNumbering:
    """theta_tilde = nu_0 + sum_i nu_i q^(kappa^(i-1)) + E q^(kappa^n) on G_n."""

    encoder: ZEncoder
    Q: int

    @property
    def n(self) -> int:
        return self.encoder.n

    @property
    def max_mu(self) -> int:
        return self.encoder.mu_size - 1

    @property
    def max_E(self) -> int:
        return self.max_mu // self.Q

    @property
    def radices(self) -> tuple[int, ...]:
        """(q, q^(kappa - 1), ..., q^(kappa^n - kappa^(n-1)), max E + 1)."""
        windows = self.encoder.base.radices[0 : 2 * self.n + 1 : 2]
        return (*windows, self.max_E + 1)

    @property
    def base(self) -> MixedRadixBase:
        return MixedRadixBase.of((*self.radices[:-1], max(self.max_E + 1, 2)), last_unbounded=True)

    @property
    def max_theta(self) -> int:
        return self.encoder.q**self.encoder.width * (self.max_E + 1) - 1

    def extract_EP(self, x: DeltaElement) -> tuple[int, int]:
        return divmod(self.encoder.mu(x), self.Q)

    def digits(self, x: DeltaElement) -> DigitVector:
        source = self.encoder.digits(x).digits
        E, _ = self.extract_EP(x)
        return DigitVector((*source[0 : 2 * self.n + 1 : 2], E), self.base)

    def theta_tilde(self, x: DeltaElement) -> int:
        return recompose(self.digits(x))

    def triple(self, x: DeltaElement) -> tuple[int, int, int]:
        E, P = self.extract_EP(x)
        return x.t, self.theta_tilde(x), P

    def in_box_union(self, t: int, theta: int, P: int) -> bool:
        """Whether (t, theta, P) is reached: E Q + P never exceeds max mu."""
        if not (0 <= t < self.encoder.width and 0 <= theta <= self.max_theta and 0 <= P < self.Q):
            return False
        E = theta // self.encoder.q**self.encoder.width
        return E * self.Q + P <= self.max_mu


@dataclass(frozen=True)
class SpreadingMap:
    """Two affine pieces sending [0, max theta_tilde] onto integers up to max theta.

    s(x) = (a - 1) x below -b and a x + b from -b on, with a = ceil(max / max_tilde)
    and b = max - a max_tilde <= 0.
    """

    a: int
    b: int
    domain_max: int
    image_max: int

    @classmethod
    def build(cls, domain_max: int, image_max: int) -> SpreadingMap:
        if domain_max < 1 or image_max < domain_max:
            raise SpreadingError(
                f"cannot spread [0, {domain_max}] over [0, {image_max}]", value=image_max
            )
        a = -(-image_max // domain_max)
        return cls(a=a, b=image_max - a * domain_max, domain_max=domain_max, image_max=image_max)

    @property
    def knee(self) -> int:
        return -self.b

    @property
    def lipschitz(self) -> int:
        return self.a

    def within(self, q: int) -> bool:
        return 1 <= self.a <= q**3

    def __call__(self, x: int) -> int:
        if not 0 <= x <= self.domain_max:
            raise SpreadingError(f"{x} outside [0, {self.domain_max}]", value=x)
        if x < self.knee:
            return (self.a - 1) * x
        return self.a * x + self.b

    def inverse(self, y: int) -> int:
        if not 0 <= y <= self.image_max:
            raise SpreadingError(f"{y} outside [0, {self.image_max}]", value=y)
        if y < (self.a - 1) * self.knee:
            x, rest = divmod(y, self.a - 1)
        else:
            x, rest = divmod(y - self.b, self.a)
            if x < self.knee:
                rest = 1
        if rest or x > self.domain_max:
            raise SpreadingError(f"{y} is not a value of the spreading map", value=y)
        return x


@dataclass(frozen=True, slots=True)
class TargetFrame:
    """Base b_{0,P,t}, ..., b_{p+M,P,t} for one cursor block, least significant first.

    ``radices`` keeps every position; positions with radix 1 (an empty shell)
    are dropped from ``base`` and ``positions`` maps base digits back to them.
    """

    blocks: TargetBlocks
    radices: tuple[int, ...]
    positions: tuple[int, ...]
    base: MixedRadixBase

    @classmethod
    def of(cls, blocks: TargetBlocks, radices: tuple[int, ...]) -> TargetFrame:
        positions = tuple(j for j, radix in enumerate(radices) if radix > 1)
        base = MixedRadixBase.of([radices[j] for j in positions])
        return cls(blocks, radices, positions, base)

    def expand(self, vector: DigitVector) -> list[int]:
        full = [0] * len(self.radices)
        for j, digit in zip(self.positions, vector.digits):
            full[j] = digit
        return full

    def compress(self, full: list[int]) -> DigitVector:
        return DigitVector(tuple(full[j] for j in self.positions), self.base)

    def product(self, upto: int) -> int:
        """b_0 ... b_upto."""
        value = 1
        for radix in self.radices[: upto + 1]:
            value *= radix
        return value

    def carry(self, z: int, k: int) -> int:
        """j_{P,t}(z, k) = min{j > k : z_j < b_j - 1}, or k + 1 past the last free digit."""
        below = sum(1 for j in self.positions if j <= k) - 1
        try:
            return self.positions[carry_index(z, below, self.base)]
        except CarrySaturationError:
            return k + 1

    def locality_holds(self, x: int, y: int, k: int) -> bool:
        """Whether x and y share every digit above j_{P,t}(min(x, y), k)."""
        below = sum(1 for j in self.positions if j <= k) - 1
        lo, hi = sorted((x, y))
        return addition_locality_holds(lo, hi, below, self.base)


# (site, allowed Gamma'_m ids in chain order) of one derived digit.
LevelSlots = tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class TargetNumbering:
    """theta_n on K_n = F_{D,I,J}: f0 read shell by shell, then mu_1, ..., mu_M."""

    delta: DeltaGroup
    family: FolnerFamily
    index: TargetIndex
    layout: CursorLayout
    template: FolnerTemplate
    levels: tuple[LevelSlots, ...]
    max_theta: int
    _frames: dict[tuple[int, int], TargetFrame] = field(repr=False, compare=False)

    @classmethod
    def build(
        cls, delta: DeltaGroup, family: FolnerFamily, index: TargetIndex, layout: CursorLayout
    ) -> TargetNumbering:
        template = folner_template(delta, family, index.target)
        levels = tuple(template.slots[: index.M])
        size = template.cardinality
        if size % index.D:
            raise InjectionConsistencyError("|K_n| is not a multiple of D_n", n=index.n)
        q = delta.params.q
        level_radices = []
        for slots in levels:
            radix = 1
            for _, allowed in slots:
                radix *= len(allowed)
            level_radices.append(radix)
        frames: dict[tuple[int, int], TargetFrame] = {}
        for P in range(index.Q):
            for t in range(index.width):
                blocks = target_blocks(layout, P, t, n=index.n, kappa=index.kappa, p=index.p)
                shells = [q ** len(blocks.shell(i)) for i in range(index.p + 1)]
                frame = TargetFrame.of(blocks, (*shells, *level_radices))
                if frame.base.weights[-1] != size // index.D:
                    raise InjectionConsistencyError(
                        f"base of block ({P}, {t}) does not count |K_n| / D_n", n=index.n
                    )
                frames[P, t] = frame
        logger.info(
            "ddcoupling target numbering n=%s frames=%s max_theta=%s",
            index.n,
            len(frames),
            size // index.D - 1,
        )
        return cls(delta, family, index, layout, template, levels, size // index.D - 1, frames)

    @property
    def q(self) -> int:
        return self.delta.params.q

    @property
    def f0_identity(self) -> int:
        return self.template.f0_identity

    def frame(self, P: int, t: int) -> TargetFrame:
        try:
            return self._frames[P, t]
        except KeyError:
            v = P * self.index.width + t
            raise CursorMapError(f"no cursor block ({P}, {t})", v=v) from None

    def frame_at(self, v: int) -> TargetFrame:
        """Frame of the ideal block chi(v); defined for every target cursor."""
        return self.frame(*self.layout.ideal_split(v))

    def _full_digits(self, y: DeltaElement, frame: TargetFrame) -> list[int]:
        if not self.template.contains(y):
            raise TargetDomainError(f"element does not lie in K_{self.index.n}", element=y)
        out = []
        for i in range(frame.blocks.p + 1):
            value = 0
            for site in reversed(frame.blocks.shell(i)):
                digit = (y.f0_at(site, self.f0_identity) - self.f0_identity) % self.q
                value = value * self.q + digit
            out.append(value)
        identities = self.template.identities
        for m, slots in enumerate(self.levels, start=1):
            values = y.prime_map(m)
            value = 0
            for site, allowed in reversed(slots):
                value = value * len(allowed) + allowed.index(
                    values.get(site, identities[m - 1])
                )
            out.append(value)
        return out

    def digits_at(self, y: DeltaElement, frame: TargetFrame) -> DigitVector:
        return frame.compress(self._full_digits(y, frame))

    def theta_any(self, y: DeltaElement) -> int:
        """theta computed in the frame chi(y.t), for cursors outside the image of u as well."""
        frame = self.frame_at(y.t)
        return recompose(self.digits_at(y, frame))

    def vartheta(self, y: DeltaElement) -> int:
        frame = self.frame(*self.layout.split(y.t))
        return recompose(self.digits_at(y, frame))

    def vartheta_decode(self, z: int, v: int) -> DeltaElement:
        frame = self.frame(*self.layout.split(v))
        if not 0 <= z <= self.max_theta:
            raise TargetDomainError(f"{z} outside [0, {self.max_theta}]", element=z)
        full = frame.expand(decompose(z, frame.base))
        f0: dict[int, int] = {}
        for i in range(frame.blocks.p + 1):
            value = full[i]
            for site in frame.blocks.shell(i):
                value, digit = divmod(value, self.q)
                f0[site] = (digit + self.f0_identity) % self.q
        fprime: list[dict[int, int]] = [{} for _ in range(self.delta.depth)]
        for m, slots in enumerate(self.levels, start=1):
            value = full[frame.blocks.p + m]
            for site, allowed in slots:
                value, digit = divmod(value, len(allowed))
                if digit:
                    fprime[m - 1][site] = allowed[digit]
        return self.delta.make(v, f0, fprime)


__all__ = ["LevelSlots", "SourceNumbering", "SpreadingMap", "TargetFrame", "TargetNumbering"]
