"""Diagonal products: level data, canonical elements and the word metric."""

from .codec import decode_element, encode_element
from .element import CURSOR_BACKWARD, CURSOR_FORWARD, DeltaElement, DeltaGroup
from .errors import DeltaParamsError, DistanceModeError, ElementFormatError, GeneratorError
from .metric import (
    ball_distances,
    distance_exact,
    distance_upper,
    essential_contribution,
    level_bound,
    range_interval,
    range_size,
    word_length_exact,
    word_length_upper,
)
from .params import DeltaLevel, DeltaParams, DeltaShape

__all__ = [
    "CURSOR_BACKWARD",
    "CURSOR_FORWARD",
    "DeltaElement",
    "DeltaGroup",
    "DeltaLevel",
    "DeltaParams",
    "DeltaParamsError",
    "DeltaShape",
    "DistanceModeError",
    "ElementFormatError",
    "GeneratorError",
    "ball_distances",
    "decode_element",
    "distance_exact",
    "distance_upper",
    "encode_element",
    "essential_contribution",
    "level_bound",
    "range_interval",
    "range_size",
    "word_length_exact",
    "word_length_upper",
]
