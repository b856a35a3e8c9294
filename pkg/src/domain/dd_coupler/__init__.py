"""Injection of the Folner sets of one diagonal product into those of another, with its audits."""

from .audit import (
    block_bound,
    box_union_size,
    carry_start,
    chi_fibers_ok,
    coupling_hypotheses,
    dd_distance_audit,
    dd_integrability_sum,
    e_sandwich_holds,
    frames_ok,
    gauge_exponent_fit,
    log_majorant,
    row_weight,
    stability_exceptions,
    theta_sandwich_holds,
    triple_map_bijective,
    verify_coupler,
)
from .coupler import CarvedCorner, DDCoupler, carve_corner, density_radius
from .cursor import CursorLayout, TargetBlocks, ideal_block, target_blocks
from .errors import (
    CouplingIndexError,
    CursorMapError,
    InjectionConsistencyError,
    SpreadingError,
    TargetDomainError,
)
from .numbering import LevelSlots, SourceNumbering, SpreadingMap, TargetFrame, TargetNumbering
from .target import TargetIndex, derived_levels, find_target_index, power_exponent

__all__ = [
    "CarvedCorner",
    "CouplingIndexError",
    "CursorLayout",
    "CursorMapError",
    "DDCoupler",
    "InjectionConsistencyError",
    "LevelSlots",
    "SourceNumbering",
    "SpreadingError",
    "SpreadingMap",
    "TargetBlocks",
    "TargetDomainError",
    "TargetFrame",
    "TargetIndex",
    "TargetNumbering",
    "block_bound",
    "box_union_size",
    "carry_start",
    "carve_corner",
    "chi_fibers_ok",
    "coupling_hypotheses",
    "dd_distance_audit",
    "dd_integrability_sum",
    "density_radius",
    "derived_levels",
    "e_sandwich_holds",
    "find_target_index",
    "frames_ok",
    "gauge_exponent_fit",
    "ideal_block",
    "log_majorant",
    "power_exponent",
    "row_weight",
    "stability_exceptions",
    "target_blocks",
    "theta_sandwich_holds",
    "triple_map_bijective",
    "verify_coupler",
]
