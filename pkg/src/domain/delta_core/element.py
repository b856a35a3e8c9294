"""Diagonal-product elements in canonical (t, f0, f') form and the group law."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..group_kernel import MarkedGamma
from .errors import DeltaParamsError, GeneratorError
from .params import DeltaParams

Sites = tuple[tuple[int, int], ...]

CURSOR_FORWARD = "cursor+"
CURSOR_BACKWARD = "cursor-"


@dataclass(frozen=True, slots=True)
class DeltaElement:
    """Canonical data of an element.

    ``f0`` lists (site, Gamma_0 id) pairs and ``fprime[m - 1]`` lists
    (site, Gamma_m id) pairs with values in Gamma'_m; both omit identity values
    and are sorted by site, so equality of elements is equality of data.
    """

    t: int
    f0: Sites = ()
    fprime: tuple[Sites, ...] = ()

    def f0_map(self) -> dict[int, int]:
        return dict(self.f0)

    def prime_map(self, m: int) -> dict[int, int]:
        return dict(self.fprime[m - 1])

    def f0_at(self, site: int, default: int = 0) -> int:
        for s, value in self.f0:
            if s == site:
                return value
        return default

    def prime_levels(self) -> tuple[int, ...]:
        """Levels m >= 1 carrying a nontrivial f'_m."""
        return tuple(m for m, sites in enumerate(self.fprime, start=1) if sites)


def _pack(values: Mapping[int, int], identity: int) -> Sites:
    return tuple(sorted((s, v) for s, v in values.items() if v != identity))


@dataclass(frozen=True, slots=True)
class _LevelView:
    gamma: MarkedGamma
    k: int
    e: int


@dataclass(frozen=True)
class DeltaGroup:
    """Group law of Delta for fixed level data.

    Full values are rebuilt transiently as
    f_m(x) = f'_m(x) theta^A(f0(x)) theta^B(f0(x - k_m)).
    """

    params: DeltaParams
    _levels: tuple[_LevelView, ...] = field(init=False, repr=False, compare=False)
    _labels: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        views = tuple(
            _LevelView(level.gamma, level.k, level.gamma.gamma.identity)
            for level in self.params.levels
        )
        labels = (
            CURSOR_FORWARD,
            CURSOR_BACKWARD,
            *(f"a{i}" for i in range(1, self.params.a_order)),
            *(f"b{j}" for j in range(1, self.params.b_order)),
        )
        object.__setattr__(self, "_levels", views)
        object.__setattr__(self, "_labels", labels)

    @property
    def depth(self) -> int:
        return self.params.depth

    @property
    def generator_labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def lamp_labels(self) -> tuple[str, ...]:
        return self._labels[2:]

    @property
    def _base(self) -> MarkedGamma:
        return self.params.base

    def identity(self) -> DeltaElement:
        return DeltaElement(0, (), ((),) * self.depth)

    def make(
        self,
        t: int,
        f0: Mapping[int, int] | None = None,
        fprime: Sequence[Mapping[int, int]] = (),
    ) -> DeltaElement:
        """Validate and canonicalize raw element data."""
        f0 = dict(f0 or {})
        base_order = self._base.order
        for site, value in f0.items():
            if not 0 <= value < base_order:
                raise DeltaParamsError(f"f0({site}) outside A x B", field="f0", value=value)
        if len(fprime) > self.depth:
            raise DeltaParamsError("more derived levels than the product has", field="fprime")
        levels: list[Sites] = []
        for m in range(1, self.depth + 1):
            values = dict(fprime[m - 1]) if m <= len(fprime) else {}
            gamma = self._levels[m - 1].gamma
            for site, value in values.items():
                if not gamma.in_prime(value):
                    raise DeltaParamsError(
                        f"f'_{m}({site}) is not in Gamma'_{m}", field="fprime", value=value
                    )
            levels.append(_pack(values, self._levels[m - 1].e))
        return DeltaElement(int(t), _pack(f0, self._base.gamma.identity), tuple(levels))

    # -- full values ---------------------------------------------------

    def full_value(
        self, x: DeltaElement, m: int, site: int, f0: Mapping[int, int] | None = None
    ) -> int:
        """f_m(site) as an element id of Gamma_m."""
        base = self._base
        f0 = x.f0_map() if f0 is None else f0
        e0 = base.gamma.identity
        if m == 0:
            return f0.get(site, e0)
        view = self._levels[m - 1]
        gamma = view.gamma
        a_index = base.theta[f0.get(site, e0)][0]
        b_index = base.theta[f0.get(site - view.k, e0)][1]
        prime = dict(x.fprime[m - 1]).get(site, view.e)
        return gamma.gamma.product((prime, gamma.a_elements[a_index], gamma.b_elements[b_index]))

    def _support(self, x: DeltaElement, m: int) -> set[int]:
        sites = {s for s, _ in x.f0}
        if m == 0:
            return sites
        k = self._levels[m - 1].k
        return sites | {s + k for s in sites} | {s for s, _ in x.fprime[m - 1]}

    def full_map(self, x: DeltaElement, m: int) -> dict[int, int]:
        """Nontrivial values of f_m."""
        f0 = x.f0_map()
        e = self._base.gamma.identity if m == 0 else self._levels[m - 1].e
        values = {s: self.full_value(x, m, s, f0) for s in self._support(x, m)}
        return {s: v for s, v in values.items() if v != e}

    def _canonical(self, t: int, f0: dict[int, int], full: list[dict[int, int]]) -> DeltaElement:
        levels: list[Sites] = []
        for view, values in zip(self._levels, full):
            gamma = view.gamma
            group = gamma.gamma
            primes = {s: group.mul(v, group.inv(gamma.tau(v))) for s, v in values.items()}
            levels.append(_pack(primes, view.e))
        return DeltaElement(t, _pack(f0, self._base.gamma.identity), tuple(levels))

    # -- group law -----------------------------------------------------

    def multiply(self, x: DeltaElement, y: DeltaElement) -> DeltaElement:
        """(f, t)(g, u) = (h, t + u) with h_m(s) = f_m(s) g_m(s - t)."""
        base_group = self._base.gamma
        shift = x.t
        x_f0, y_f0 = x.f0_map(), y.f0_map()
        f0 = dict(x_f0)
        for s, v in y.f0:
            f0[s + shift] = base_group.mul(f0.get(s + shift, base_group.identity), v)
        full: list[dict[int, int]] = []
        for m, view in enumerate(self._levels, start=1):
            group = view.gamma.gamma
            sites = self._support(x, m) | {s + shift for s in self._support(y, m)}
            full.append(
                {
                    s: group.mul(
                        self.full_value(x, m, s, x_f0), self.full_value(y, m, s - shift, y_f0)
                    )
                    for s in sites
                }
            )
        return self._canonical(x.t + y.t, f0, full)

    def inverse(self, x: DeltaElement) -> DeltaElement:
        """(f, t)^-1 = (h, -t) with h_m(s) = f_m(s + t)^-1."""
        base_group = self._base.gamma
        shift = x.t
        x_f0 = x.f0_map()
        f0 = {s - shift: base_group.inv(v) for s, v in x.f0}
        full: list[dict[int, int]] = []
        for m, view in enumerate(self._levels, start=1):
            group = view.gamma.gamma
            full.append(
                {
                    s - shift: group.inv(self.full_value(x, m, s, x_f0))
                    for s in self._support(x, m)
                }
            )
        return self._canonical(-shift, f0, full)

    def product(self, elements: Iterable[DeltaElement]) -> DeltaElement:
        result = self.identity()
        for element in elements:
            result = self.multiply(result, element)
        return result

    # -- generators ----------------------------------------------------

    def _lamp(self, label: str) -> tuple[str, int]:
        kind, index = label[:1], label[1:]
        bound = self.params.a_order if kind == "a" else self.params.b_order
        if kind not in ("a", "b") or not index.isdigit() or not 0 < int(index) < bound:
            raise GeneratorError(f"unknown generator {label!r}", label=label)
        return kind, int(index)

    def generator_element(self, label: str) -> DeltaElement:
        if label == CURSOR_FORWARD:
            return DeltaElement(1, (), ((),) * self.depth)
        if label == CURSOR_BACKWARD:
            return DeltaElement(-1, (), ((),) * self.depth)
        kind, index = self._lamp(label)
        base = self._base
        value = base.a_elements[index] if kind == "a" else base.b_elements[index]
        return DeltaElement(0, ((0, value),), ((),) * self.depth)

    def apply_generator(self, x: DeltaElement, label: str) -> DeltaElement:
        """Right multiplication by a generator, updating canonical data in place.

        An A-lamp at cursor t changes f'_m(t) by alpha [beta, a] alpha^-1 with
        alpha = theta^A(f0(t)) and beta = theta^B(f0(t - k_m)); B-lamps and
        cursor moves leave every f'_m unchanged.
        """
        if label == CURSOR_FORWARD:
            return DeltaElement(x.t + 1, x.f0, x.fprime)
        if label == CURSOR_BACKWARD:
            return DeltaElement(x.t - 1, x.f0, x.fprime)
        kind, index = self._lamp(label)
        base = self._base
        base_group = base.gamma
        f0 = x.f0_map()
        old = f0.get(x.t, base_group.identity)
        lamp = base.a_elements[index] if kind == "a" else base.b_elements[index]
        f0[x.t] = base_group.mul(old, lamp)
        if kind == "b":
            return DeltaElement(x.t, _pack(f0, base_group.identity), x.fprime)

        levels: list[Sites] = []
        alpha_index = base.theta[old][0]
        for m, view in enumerate(self._levels, start=1):
            beta_index = base.theta[f0.get(x.t - view.k, base_group.identity)][1]
            if beta_index == 0:
                levels.append(x.fprime[m - 1])
                continue
            gamma = view.gamma
            group = gamma.gamma
            alpha = gamma.a_elements[alpha_index]
            commutator = group.commutator(gamma.b_elements[beta_index], gamma.a_elements[index])
            twist = group.product((alpha, commutator, group.inv(alpha)))
            primes = x.prime_map(m)
            primes[x.t] = group.mul(primes.get(x.t, view.e), twist)
            levels.append(_pack(primes, view.e))
        return DeltaElement(x.t, _pack(f0, base_group.identity), tuple(levels))

    def word(self, labels: Iterable[str], start: DeltaElement | None = None) -> DeltaElement:
        element = self.identity() if start is None else start
        for label in labels:
            element = self.apply_generator(element, label)
        return element

    def cursor(self, t: int) -> DeltaElement:
        return DeltaElement(t, (), ((),) * self.depth)


__all__ = [
    "CURSOR_BACKWARD",
    "CURSOR_FORWARD",
    "DeltaElement",
    "DeltaGroup",
    "Sites",
]
