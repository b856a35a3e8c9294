"""Folner families F_{n,i,j}: chains, cardinalities, enumeration, boundaries and growth."""

from .chains import SubsetChain, abstract_chain, base_chain, chain_sizes, concrete_chain
from .errors import ChainSearchError, EnumerationBudgetError, FolnerIndexError
from .growth import (
    cursor_only_estimate,
    growth_bounds_report,
    growth_rows,
    isoperimetric_estimate,
    trend_slope,
)
from .index import FolnerFamily, FolnerIndex
from .sofic import balls_match, labeled_ball, sofic_defect
from .templates import (
    FolnerTemplate,
    boundary_law_holds,
    derived_change_count,
    enumerate_folner,
    folner_boundary,
    folner_template,
    lamp_closure_exceptions,
)

__all__ = [
    "ChainSearchError",
    "EnumerationBudgetError",
    "FolnerFamily",
    "FolnerIndex",
    "FolnerIndexError",
    "FolnerTemplate",
    "SubsetChain",
    "abstract_chain",
    "balls_match",
    "base_chain",
    "boundary_law_holds",
    "chain_sizes",
    "concrete_chain",
    "cursor_only_estimate",
    "derived_change_count",
    "enumerate_folner",
    "folner_boundary",
    "folner_template",
    "growth_bounds_report",
    "growth_rows",
    "isoperimetric_estimate",
    "labeled_ball",
    "lamp_closure_exceptions",
    "sofic_defect",
    "trend_slope",
]
