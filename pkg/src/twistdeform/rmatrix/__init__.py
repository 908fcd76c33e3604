"""RMatrix package re-exports for easy imports from `src.twistdeform.rmatrix`."""
from .rmatrix import (
    RMatrix,
    TrivectorElement,
    abelian_rmatrices,
    build_rmatrix,
    check_cybe,
    commuting_pairs,
    control_rmatrix,
    schouten_bracket,
    trivector_coefficient,
)

__all__ = [
    "RMatrix",
    "TrivectorElement",
    "abelian_rmatrices",
    "build_rmatrix",
    "check_cybe",
    "commuting_pairs",
    "control_rmatrix",
    "schouten_bracket",
    "trivector_coefficient",
]
