"""A/B-marked finite groups, their derived subgroup and theta projections."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ...models.reports import GammaFamilyFit, MarkedGammaCheck
from .errors import MarkingError, UnreachableElementError
from .tables import (
    FiniteGroup,
    closure_group,
    cyclic_group,
    direct_product,
    is_normal,
    normal_closure,
    subgroup_closure,
    word_lengths,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MarkedGamma:
    """A finite group marked by subgroups A and B with Gamma / Gamma' = A x B.

    ``a_elements[i]`` and ``b_elements[j]`` list the marked subgroups with the
    identity at index 0. ``theta[g] = (i, j)`` is the projection to A x B,
    written as the base id ``i * |B| + j`` by ``theta_id``. ``gamma_prime``
    lists Gamma' sorted by word length then id, identity first.
    """

    gamma: FiniteGroup
    a_elements: tuple[int, ...]
    b_elements: tuple[int, ...]
    gamma_prime: tuple[int, ...]
    theta: tuple[tuple[int, int], ...]
    diameter_l: int
    word_lengths: tuple[int, ...] = field(repr=False)
    prime_position: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        positions = {g: i for i, g in enumerate(self.gamma_prime)}
        object.__setattr__(self, "prime_position", positions)

    @property
    def order(self) -> int:
        return self.gamma.order

    @property
    def a_order(self) -> int:
        return len(self.a_elements)

    @property
    def b_order(self) -> int:
        return len(self.b_elements)

    @property
    def q(self) -> int:
        return self.a_order * self.b_order

    @property
    def prime_order(self) -> int:
        return len(self.gamma_prime)

    def theta_id(self, g: int) -> int:
        i, j = self.theta[g]
        return i * self.b_order + j

    def theta_a(self, g: int) -> int:
        return self.a_elements[self.theta[g][0]]

    def theta_b(self, g: int) -> int:
        return self.b_elements[self.theta[g][1]]

    def tau(self, g: int) -> int:
        """theta^A(g) * theta^B(g) as an element of Gamma."""
        return self.gamma.mul(self.theta_a(g), self.theta_b(g))

    def a_lift(self, i: int) -> int:
        return self.a_elements[i % self.a_order]

    def b_lift(self, j: int) -> int:
        return self.b_elements[j % self.b_order]

    def in_prime(self, g: int) -> bool:
        return g in self.prime_position


def mark_gamma(group: FiniteGroup, a_ids: Sequence[int], b_ids: Sequence[int]) -> MarkedGamma:
    """Mark ``group`` by the subgroups listed in ``a_ids`` and ``b_ids``.

    Raises:
        MarkingError: A or B is not a subgroup, A u B does not generate, or the
            cosets of the normal closure of [A, B] do not match A x B one to one.
    """
    e = group.identity
    for name, ids in (("A", a_ids), ("B", b_ids)):
        if not ids or ids[0] != e:
            raise MarkingError(f"marking {name} must list the identity first", condition="identity")
        if len(set(ids)) != len(ids) or subgroup_closure(group, ids) != frozenset(ids):
            raise MarkingError(f"marking {name} is not a subgroup", condition="subgroup")
    generators = set(a_ids) | set(b_ids)
    try:
        lengths = word_lengths(group, generators)
    except UnreachableElementError as exc:
        raise MarkingError(
            f"A u B reaches {exc.reached} of {exc.order} elements", condition="generation"
        ) from exc

    commutators = {group.commutator(a, b) for a in a_ids for b in b_ids}
    prime = normal_closure(group, commutators)
    theta: list[tuple[int, int] | None] = [None] * group.order
    for i, a in enumerate(a_ids):
        for j, b in enumerate(b_ids):
            coset_rep = group.mul(a, b)
            for d in prime:
                g = group.mul(d, coset_rep)
                if theta[g] is not None:
                    raise MarkingError(
                        "two marked pairs share a coset of Gamma'", condition="quotient"
                    )
                theta[g] = (i, j)
    if any(value is None for value in theta):
        raise MarkingError("A x B misses a coset of Gamma'", condition="quotient")

    ordered_prime = tuple(sorted(prime, key=lambda g: (lengths[g], g)))
    marked = MarkedGamma(
        gamma=group,
        a_elements=tuple(a_ids),
        b_elements=tuple(b_ids),
        gamma_prime=ordered_prime,
        theta=tuple(theta),  # type: ignore[arg-type]
        diameter_l=max(lengths),
        word_lengths=lengths,
    )
    logger.debug(
        "marked gamma order=%s prime=%s q=%s diameter=%s",
        group.order,
        marked.prime_order,
        marked.q,
        marked.diameter_l,
    )
    return marked


def base_gamma(a_order: int = 2, b_order: int = 3) -> MarkedGamma:
    """Gamma_0 = A x B with trivial derived subgroup; the id of (i, j) is i * |B| + j."""
    group = direct_product(cyclic_group(a_order), cyclic_group(b_order))
    return mark_gamma(
        group,
        [i * b_order for i in range(a_order)],
        list(range(b_order)),
    )


def fiber_product_gamma(
    h_group: FiniteGroup, x: int, y: int, *, a_order: int = 2, b_order: int = 3
) -> MarkedGamma:
    """Subgroup of Z/p x Z/r x H generated by ((1, 0), x) and ((0, 1), y).

    A is marked by ((k, 0), x^k) and B by ((0, k), y^k).
    """
    if h_group.element_order(x) != a_order:
        raise MarkingError(f"x must have order {a_order}", condition="order")
    if h_group.element_order(y) != b_order:
        raise MarkingError(f"y must have order {b_order}", condition="order")
    if subgroup_closure(h_group, (x, y)) != frozenset(range(h_group.order)):
        raise MarkingError("x and y do not generate H", condition="generation")

    def multiply(u: tuple[int, int, int], v: tuple[int, int, int]) -> tuple[int, int, int]:
        return ((u[0] + v[0]) % a_order, (u[1] + v[1]) % b_order, h_group.mul(u[2], v[2]))

    e = h_group.identity
    group = closure_group([(1, 0, x), (0, 1, y)], (0, 0, e), multiply)
    a_ids = [group.id_of((k, 0, h_group.power(x, k))) for k in range(a_order)]
    b_ids = [group.id_of((0, k, h_group.power(y, k))) for k in range(b_order)]
    return mark_gamma(group, a_ids, b_ids)


def derived_part(g: int, marked: MarkedGamma) -> int:
    """g' = g (theta^A(g) theta^B(g))^-1, an element of Gamma'."""
    group = marked.gamma
    return group.mul(g, group.inv(marked.tau(g)))


def product_rule_holds(g: int, f: int, marked: MarkedGamma) -> bool:
    """(g f)' = g' tau(g) f' tau(f) tau(g f)^-1 with tau = theta^A theta^B."""
    group = marked.gamma
    lhs = derived_part(group.mul(g, f), marked)
    rhs = group.product(
        (
            derived_part(g, marked),
            marked.tau(g),
            derived_part(f, marked),
            marked.tau(f),
            group.inv(marked.tau(group.mul(g, f))),
        )
    )
    return lhs == rhs


def conjugation_rule_holds(g: int, f: int, marked: MarkedGamma) -> bool | None:
    """(g f)' = g' tau(g) f' tau(g)^-1 when tau(g f) = tau(g) tau(f); ``None`` otherwise."""
    group = marked.gamma
    gf = group.mul(g, f)
    if marked.tau(gf) != group.mul(marked.tau(g), marked.tau(f)):
        return None
    rhs = group.product(
        (derived_part(g, marked), marked.tau(g), derived_part(f, marked), group.inv(marked.tau(g)))
    )
    return derived_part(gf, marked) == rhs


def check_marked_gamma(marked: MarkedGamma, *, name: str = "gamma") -> MarkedGammaCheck:
    """Exhaustive table verification of the marking invariants."""
    group = marked.gamma
    a_set = set(marked.a_elements)
    b_set = set(marked.b_elements)
    commutators = {group.commutator(a, b) for a in a_set for b in b_set}
    prime = frozenset(marked.gamma_prime)
    theta_hom = all(
        _theta_product(marked, marked.theta[g], marked.theta[h]) == marked.theta[group.mul(g, h)]
        for g in range(group.order)
        for h in range(group.order)
    )
    kernel = frozenset(g for g in range(group.order) if marked.theta[g] == (0, 0))
    try:
        lengths: tuple[int, ...] | None = word_lengths(group, a_set | b_set)
    except UnreachableElementError:
        lengths = None
    derived_ok = all(marked.in_prime(derived_part(g, marked)) for g in range(group.order))
    return MarkedGammaCheck(
        name=name,
        order=group.order,
        prime_order=marked.prime_order,
        q=marked.q,
        diameter=marked.diameter_l,
        generates=lengths is not None,
        prime_is_normal_closure=prime == normal_closure(group, commutators),
        prime_is_normal=is_normal(group, prime),
        order_law=group.order == marked.q * marked.prime_order,
        theta_is_homomorphism=theta_hom,
        theta_kernel_is_prime=kernel == prime,
        diameter_matches_bfs=lengths is not None and max(lengths) == marked.diameter_l,
        derived_parts_in_prime=derived_ok,
    )


def _theta_product(
    marked: MarkedGamma, left: tuple[int, int], right: tuple[int, int]
) -> tuple[int, int]:
    group = marked.gamma
    a = group.mul(marked.a_elements[left[0]], marked.a_elements[right[0]])
    b = group.mul(marked.b_elements[left[1]], marked.b_elements[right[1]])
    return (marked.a_elements.index(a), marked.b_elements.index(b))


def fit_log_prime_bounds(family: Sequence[MarkedGamma]) -> GammaFamilyFit:
    """Fit ln|Gamma'| against the diameter l and report affine envelope constants.

    c1 is the smallest ratio ln|Gamma'| / l, c2 the largest offset needed for
    c1 l - c2 <= ln|Gamma'|, and c3 the largest ratio for ln|Gamma'| <= c3 l.
    """
    points = [(m.diameter_l, math.log(m.prime_order)) for m in family if m.prime_order > 1]
    if not points:
        return GammaFamilyFit(points=0)
    ls = np.array([p[0] for p in points], dtype=float)
    logs = np.array([p[1] for p in points], dtype=float)
    ratios = logs / ls
    c1 = float(ratios.min())
    c2 = float(np.max(c1 * ls - logs))
    slope, intercept = (None, None)
    if len(set(ls.tolist())) > 1:
        slope, intercept = (float(v) for v in np.polyfit(ls, logs, 1))
    return GammaFamilyFit(
        points=len(points),
        c1=c1,
        c2=max(c2, 0.0),
        c3=float(ratios.max()),
        slope=slope,
        intercept=intercept,
    )


__all__ = [
    "MarkedGamma",
    "base_gamma",
    "check_marked_gamma",
    "conjugation_rule_holds",
    "derived_part",
    "fiber_product_gamma",
    "fit_log_prime_bounds",
    "mark_gamma",
    "product_rule_holds",
]
