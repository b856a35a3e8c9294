"""The bijection between G_n = F_{kappa^n} and [0, |G_n| - 1].

Digits of the encoded integer interlace the window numberings nu_0, ..., nu_n
of f0 with the base-kappa digits of the cursor and finish with the packing mu
of the derived parts; see ``ZEncoder.radices``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..delta_core import CURSOR_BACKWARD, CURSOR_FORWARD, DeltaElement, DeltaGroup
from ..folner_atlas import FolnerFamily, FolnerTemplate, folner_template
from ..mixed_radix import DigitVector, MixedRadixBase, decompose, recompose
from .blocks import BlockDecompositionZ, block_intervals, carry_position
from .errors import InteriorError, ZDomainError

logger = logging.getLogger(__name__)

# (level m, site, |Gamma'_m|) for every derived digit, least significant first.
MuSlot = tuple[int, int, int]


def _mu_slots(delta: DeltaGroup, family: FolnerFamily, width: int) -> tuple[MuSlot, ...]:
    params = delta.params
    return tuple(
        (m, site, params.gamma(m).prime_order)
        for m in range(1, family.top_level(width) + 1)
        for site in range(params.k(m), width)
    )


@dataclass(frozen=True)
class ZEncoder:
    delta: DeltaGroup
    n: int
    family: FolnerFamily
    template: FolnerTemplate
    mu_slots: tuple[MuSlot, ...]
    mu_size: int
    size: int
    base: MixedRadixBase = field(repr=False)
    _mu_base: MixedRadixBase | None = field(repr=False, default=None)

    @classmethod
    def build(cls, delta: DeltaGroup, n: int) -> ZEncoder:
        if n < 1:
            raise ZDomainError("the encoder needs n >= 1", n=n)
        family = FolnerFamily.of(delta.params)
        kappa, q = delta.params.kappa, delta.params.q
        width = kappa**n
        idx = family.last(width)
        template = folner_template(delta, family, idx)
        slots = _mu_slots(delta, family, width)
        mu_size = 1
        for _, _, radix in slots:
            mu_size *= radix
        size = template.cardinality
        if mu_size * width * q**width != size:
            raise ZDomainError(
                "derived packing does not match |G_n| / (kappa^n q^(kappa^n))", n=n, value=size
            )
        radices = [q]
        for i in range(1, n + 1):
            radices += [kappa, q ** (kappa**i - kappa ** (i - 1))]
        # The mu digit absorbs the remainder; the range is checked against ``size``.
        radices.append(max(mu_size, 2))
        mu_base = MixedRadixBase.of([r for _, _, r in slots]) if slots else None
        logger.info("zcoupling encoder n=%s size=%s mu_size=%s", n, size, mu_size)
        return cls(
            delta=delta,
            n=n,
            family=family,
            template=template,
            mu_slots=slots,
            mu_size=mu_size,
            size=size,
            base=MixedRadixBase.of(radices, last_unbounded=True),
            _mu_base=mu_base,
        )

    @property
    def kappa(self) -> int:
        return self.delta.params.kappa

    @property
    def q(self) -> int:
        return self.delta.params.q

    @property
    def width(self) -> int:
        return self.kappa**self.n

    @property
    def radices(self) -> tuple[int, ...]:
        """(q, kappa, q^(kappa - 1), kappa, ..., q^(kappa^n - kappa^(n-1)), max mu + 1)."""
        return (*self.base.radices[:-1], self.mu_size)

    def contains(self, x: DeltaElement) -> bool:
        return self.template.contains(x)

    def is_interior(self, x: DeltaElement) -> bool:
        return 1 <= x.t <= self.width - 2

    def blocks(self, t: int) -> BlockDecompositionZ:
        return block_intervals(t, self.n, self.kappa)

    # -- canonical numberings ------------------------------------------

    def _f0_digit(self, value: int) -> int:
        return (value - self.template.f0_identity) % self.q

    def _f0_value(self, digit: int) -> int:
        return (digit + self.template.f0_identity) % self.q

    def window(self, x: DeltaElement, blocks: BlockDecompositionZ, i: int) -> int:
        """nu_{i,t}: f0 on the shell B_i minus B_(i-1) read base q, lowest site first."""
        value = 0
        for site in reversed(blocks.shell(i)):
            value = value * self.q + self._f0_digit(x.f0_at(site, self.template.f0_identity))
        return value

    def mu(self, x: DeltaElement) -> int:
        if self._mu_base is None:
            return 0
        params = self.delta.params
        digits: list[int] = []
        for m, site, _ in self.mu_slots:
            gamma = params.gamma(m)
            digits.append(gamma.prime_position[x.prime_map(m).get(site, gamma.gamma.identity)])
        return recompose(DigitVector(tuple(digits), self._mu_base))

    def _mu_decode(self, value: int) -> list[dict[int, int]]:
        params = self.delta.params
        levels: list[dict[int, int]] = [{} for _ in range(params.depth)]
        if self._mu_base is None:
            return levels
        for (m, site, _), digit in zip(self.mu_slots, decompose(value, self._mu_base).digits):
            if digit:
                levels[m - 1][site] = params.gamma(m).gamma_prime[digit]
        return levels

    # -- codec ---------------------------------------------------------

    def digits(self, x: DeltaElement) -> DigitVector:
        if not self.contains(x):
            raise ZDomainError(
                f"element does not lie in G_{self.n} = F_{self.width}", n=self.n, value=x
            )
        blocks = self.blocks(x.t)
        t_digits = decompose(x.t, MixedRadixBase.of([self.kappa] * self.n)).digits
        out = [self.window(x, blocks, 0)]
        for i in range(1, self.n + 1):
            out += [t_digits[i - 1], self.window(x, blocks, i)]
        out.append(self.mu(x))
        return DigitVector(tuple(out), self.base)

    def encode(self, x: DeltaElement) -> int:
        return recompose(self.digits(x))

    def decode(self, z: int) -> DeltaElement:
        if not 0 <= z < self.size:
            raise ZDomainError(f"{z} outside [0, {self.size - 1}]", n=self.n, value=z)
        digits = decompose(z, self.base).digits
        t = sum(digits[2 * i + 1] * self.kappa**i for i in range(self.n))
        blocks = self.blocks(t)
        f0: dict[int, int] = {}
        for i in range(self.n + 1):
            value = digits[2 * i]
            for site in blocks.shell(i):
                value, digit = divmod(value, self.q)
                f0[site] = self._f0_value(digit)
        return self.delta.make(t, f0, self._mu_decode(digits[-1]))

    # -- neighbours ----------------------------------------------------

    def gap_bound(self, x: DeltaElement, label: str) -> int:
        """q for lamps; kappa^(i0+1) q^(kappa^(i0+1)) for the cursor, exclusive."""
        if label == CURSOR_FORWARD:
            i0 = carry_position(x.t, self.n, self.kappa)
        elif label == CURSOR_BACKWARD:
            i0 = carry_position(x.t - 1, self.n, self.kappa)
        else:
            return self.q
        block = self.kappa ** (i0 + 1)
        return block * self.q**block

    def neighbor_gap(self, x: DeltaElement, label: str) -> int:
        if not self.is_interior(x):
            raise InteriorError(
                f"cursor {x.t} is not interior to [0, {self.width - 1}]", t=x.t, n=self.n
            )
        return abs(self.encode(x) - self.encode(self.delta.apply_generator(x, label)))


def neighbor_gap(encoder: ZEncoder, x: DeltaElement, label: str) -> int:
    return encoder.neighbor_gap(x, label)


__all__ = ["MuSlot", "ZEncoder", "neighbor_gap"]
