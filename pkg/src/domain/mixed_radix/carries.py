"""Carry-index analysis, carry counting and Lipschitz density over a mixed-radix base."""

from __future__ import annotations

from math import prod
from typing import Iterable

from .base import DigitVector, MixedRadixBase, check_in_range, decompose, digits_of
from .errors import CarrySaturationError, RadixRangeError


def carry_index(x: int | DigitVector, k: int, base: MixedRadixBase) -> int:
    """Return min{j > k : x_j < b_j - 1}.

    Raises:
        CarrySaturationError: every digit strictly above ``k`` is maximal.
    """
    vector = digits_of(x, base)
    for j in range(k + 1, len(base)):
        if not base.digit_is_maximal(j, vector[j]):
            return j
    raise CarrySaturationError(
        f"all digits above index {k} are maximal in base {base.radices}", k=k
    )


def addition_locality_holds(x: int, y: int, k: int, base: MixedRadixBase) -> bool:
    """Whether x and y agree on every digit strictly above the carry index of x.

    A saturated x has no carry index; the comparison then runs above ``k``
    itself, which any in-range y close to x also satisfies.
    """
    if x > y:
        raise RadixRangeError("addition locality expects x <= y", value=x, bound=y)
    left = decompose(x, base)
    right = decompose(y, base)
    try:
        pivot = carry_index(left, k, base)
    except CarrySaturationError:
        pivot = k
    return left.digits[pivot + 1 :] == right.digits[pivot + 1 :]


def count_by_carry_index(base: MixedRadixBase, k: int, m: int) -> int:
    """Exact number of x in [0, prod b - 1] whose carry index above k is m."""
    if base.last_unbounded:
        raise RadixRangeError("carry counting needs a bounded last digit")
    for index in (k, m):
        if not 0 <= index <= base.top:
            raise RadixRangeError(f"index {index} outside base", value=index, bound=base.top)
    if k >= m:
        return 0
    radices = base.radices
    return prod(radices[m + 1 :]) * (radices[m] - 1) * prod(radices[: k + 1])


def lipschitz_image_covers(image: Iterable[int], base: MixedRadixBase, i: int, c: int) -> bool:
    """Whether every y in range shares its digits above i with some image point.

    Two integers agree above digit i exactly when they share the quotient by
    b_0 ... b_i, so the check reduces to covering every such quotient.
    """
    if base.last_unbounded:
        raise RadixRangeError("density check needs a bounded last digit")
    if not 0 <= i <= base.top:
        raise RadixRangeError(f"index {i} outside base", value=i, bound=base.top)
    block = base.weight(i + 1)
    if not 0 < c < block:
        raise RadixRangeError(
            "Lipschitz constant must satisfy 0 < c < b_0...b_i", value=c, bound=block
        )
    quotients: set[int] = set()
    for x in image:
        check_in_range(x, base)
        quotients.add(x // block)
    if not quotients:
        raise RadixRangeError("image must be nonempty")
    return len(quotients) == base.weights[-1] // block


def max_gap(image: Iterable[int]) -> int:
    """Largest distance between consecutive points of a sorted image (0 for singletons)."""
    points = sorted(set(image))
    return max((b - a for a, b in zip(points, points[1:])), default=0)


__all__ = [
    "addition_locality_holds",
    "carry_index",
    "count_by_carry_index",
    "lipschitz_image_covers",
    "max_gap",
]
