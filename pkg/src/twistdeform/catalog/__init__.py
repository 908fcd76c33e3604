"""Catalog package re-exports for easy imports from `src.twistdeform.catalog`."""
from .catalog import (
    CatalogDiff,
    catalog_coproduct,
    catalog_entries,
    catalog_reduction,
    compare_to_catalog,
    dump_catalog,
    evaluate_entry,
    find_entry,
    relativistic_parent,
    resolve_deformation,
)
from .expressions import EvalContext, taylor_coefficients
from .poincare import CatalogEntry
from .equations import normalization_equation, rmatrix_equation, second_leg_equation, twist_equation
from .spacetime import CommutatorTable, catalog_spacetime, complete_indices, spacetime_equation, spacetime_key

__all__ = [
    "CatalogDiff",
    "CatalogEntry",
    "CommutatorTable",
    "EvalContext",
    "catalog_coproduct",
    "catalog_entries",
    "catalog_reduction",
    "catalog_spacetime",
    "compare_to_catalog",
    "complete_indices",
    "dump_catalog",
    "evaluate_entry",
    "find_entry",
    "normalization_equation",
    "relativistic_parent",
    "resolve_deformation",
    "rmatrix_equation",
    "second_leg_equation",
    "spacetime_equation",
    "spacetime_key",
    "taylor_coefficients",
    "twist_equation",
]

# re-export exceptions
from .catalog import CatalogError
__all__.extend(["CatalogError"])
