"""Deformations package re-exports for easy imports from `src.twistdeform.deformations`."""
from .deformations import (
    ALL_DEFORMATIONS,
    BASIC_DEFORMATIONS,
    CANONICAL_INDICES,
    GENERALIZED_DEFORMATIONS,
    DeformationId,
    DeformationSpec,
    GalileiDeformationId,
    RTerm,
    admissible_indices,
    canonical_indices,
    format_indices,
    get_spec,
    parse_deformation,
    parse_indices,
    validate_indices,
)

__all__ = [
    "ALL_DEFORMATIONS",
    "BASIC_DEFORMATIONS",
    "CANONICAL_INDICES",
    "GENERALIZED_DEFORMATIONS",
    "DeformationId",
    "DeformationSpec",
    "GalileiDeformationId",
    "RTerm",
    "admissible_indices",
    "canonical_indices",
    "format_indices",
    "get_spec",
    "parse_deformation",
    "parse_indices",
    "validate_indices",
]

# re-export exceptions
from .deformations import IndexConstraintError, UnknownDeformationError
__all__.extend(["IndexConstraintError", "UnknownDeformationError"])
