"""Spacetime package re-exports for easy imports from `src.twistdeform.spacetime`."""
from .functions import COORDINATES, Monomial, PolyFunction
from .star import (
    DEFAULT_SAFETY_ORDER,
    SpacetimeDerivation,
    act,
    act_generator,
    check_classical_limit,
    check_star_antisymmetry,
    check_star_associativity,
    check_star_jacobi,
    commutator_table,
    derive_spacetime,
    monomials,
    representation_violations,
    spacetime_reduction,
    star_bracket,
    star_commutator,
    star_product,
    table_as_dict,
    table_latex,
    table_mismatches,
)

__all__ = [
    "COORDINATES",
    "DEFAULT_SAFETY_ORDER",
    "Monomial",
    "PolyFunction",
    "SpacetimeDerivation",
    "act",
    "act_generator",
    "check_classical_limit",
    "check_star_antisymmetry",
    "check_star_associativity",
    "check_star_jacobi",
    "commutator_table",
    "derive_spacetime",
    "monomials",
    "representation_violations",
    "spacetime_reduction",
    "star_bracket",
    "star_commutator",
    "star_product",
    "table_as_dict",
    "table_latex",
    "table_mismatches",
]

# re-export exceptions
from .star import StarProductTerminationError
__all__.extend(["StarProductTerminationError"])
