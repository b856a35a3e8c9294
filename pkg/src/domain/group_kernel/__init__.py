"""Finite marked groups and their derived subgroups."""

from .errors import GroupTableError, MarkingError, TableFormatError, UnreachableElementError
from .marking import (
    MarkedGamma,
    base_gamma,
    check_marked_gamma,
    conjugation_rule_holds,
    derived_part,
    fiber_product_gamma,
    fit_log_prime_bounds,
    mark_gamma,
    product_rule_holds,
)
from .table_io import dump_marked_gamma, load_marked_gamma
from .tables import (
    FiniteGroup,
    alternating_group,
    check_associativity,
    cyclic_group,
    diameter,
    direct_product,
    normal_closure,
    perm_from_cycles,
    permutation_group,
    subgroup_closure,
    symmetric_group,
    word_lengths,
)

__all__ = [
    "FiniteGroup",
    "GroupTableError",
    "MarkedGamma",
    "MarkingError",
    "TableFormatError",
    "UnreachableElementError",
    "alternating_group",
    "base_gamma",
    "check_associativity",
    "check_marked_gamma",
    "conjugation_rule_holds",
    "cyclic_group",
    "derived_part",
    "diameter",
    "direct_product",
    "dump_marked_gamma",
    "fiber_product_gamma",
    "fit_log_prime_bounds",
    "load_marked_gamma",
    "mark_gamma",
    "normal_closure",
    "perm_from_cycles",
    "permutation_group",
    "product_rule_holds",
    "subgroup_closure",
    "symmetric_group",
    "word_lengths",
]
