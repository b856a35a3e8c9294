"""Variable-base integer arithmetic."""

from .base import DigitVector, MixedRadixBase, decompose, recompose
from .carries import (
    addition_locality_holds,
    carry_index,
    count_by_carry_index,
    lipschitz_image_covers,
    max_gap,
)
from .errors import CarrySaturationError, DigitRangeError, RadixRangeError

__all__ = [
    "CarrySaturationError",
    "DigitRangeError",
    "DigitVector",
    "MixedRadixBase",
    "RadixRangeError",
    "addition_locality_holds",
    "carry_index",
    "count_by_carry_index",
    "decompose",
    "lipschitz_image_covers",
    "max_gap",
    "recompose",
]
