"""Algebra package re-exports for easy imports from `src.twistdeform.algebra`."""
from .algebra import (
    GALILEI_KINDS,
    METRIC,
    GeneratorId,
    LieAlgebraSpec,
    UEAElement,
    Word,
    build_galilei,
    build_poincare,
    eta,
    jacobi_violations,
    kron,
    pbw_normalize,
    uea_commutator,
    uea_mul,
    word_text,
)

__all__ = [
    "GALILEI_KINDS",
    "METRIC",
    "GeneratorId",
    "LieAlgebraSpec",
    "UEAElement",
    "Word",
    "build_galilei",
    "build_poincare",
    "eta",
    "jacobi_violations",
    "kron",
    "pbw_normalize",
    "uea_commutator",
    "uea_mul",
    "word_text",
]

# re-export exceptions
from .algebra import AlgebraMismatchError, UnknownGeneratorError
__all__.extend(["AlgebraMismatchError", "UnknownGeneratorError"])
