"""Explicit numbering of the Folner sets F_{kappa^n} by intervals of Z, with its audits."""

from .audit import (
    audit_elements,
    carry_histogram,
    cursor_majorant,
    gap_audit,
    gap_histogram,
    integrability_sum,
    majorant_series,
    observed_carry_histogram,
    saturated_count,
    verify_encoder,
    window_stability_exceptions,
)
from .blocks import BlockDecompositionZ, block_intervals, carry_position, cursor_base, cursor_digits
from .encoder import ZEncoder, neighbor_gap
from .errors import GaugeError, InteriorError, ZDomainError
from .gauges import compose_integrability, constant_gauge, gauge_value, log_gauge_at_log

__all__ = [
    "BlockDecompositionZ",
    "GaugeError",
    "InteriorError",
    "ZDomainError",
    "ZEncoder",
    "audit_elements",
    "block_intervals",
    "carry_histogram",
    "carry_position",
    "compose_integrability",
    "constant_gauge",
    "cursor_base",
    "cursor_digits",
    "cursor_majorant",
    "gap_audit",
    "gap_histogram",
    "gauge_value",
    "integrability_sum",
    "log_gauge_at_log",
    "majorant_series",
    "neighbor_gap",
    "observed_carry_histogram",
    "saturated_count",
    "verify_encoder",
    "window_stability_exceptions",
]
