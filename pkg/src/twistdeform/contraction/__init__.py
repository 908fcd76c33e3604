"""Contraction package re-exports for easy imports from `src.twistdeform.contraction`."""
from .contraction import (
    STANDARD_CONTRACTION,
    UNSCALED_CONTRACTION,
    ContractedAlgebra,
    ContractedHopf,
    ContractionMap,
    GeneratorImage,
    check_galilei_classical_limit,
    check_limit_commutation,
    contract_algebra,
    contract_element,
    contract_hopf,
    contracted_antipodes,
    image_algebra,
    rebase,
    substitute,
    take_limit,
)

__all__ = [
    "STANDARD_CONTRACTION",
    "UNSCALED_CONTRACTION",
    "ContractedAlgebra",
    "ContractedHopf",
    "ContractionMap",
    "GeneratorImage",
    "check_galilei_classical_limit",
    "check_limit_commutation",
    "contract_algebra",
    "contract_element",
    "contract_hopf",
    "contracted_antipodes",
    "image_algebra",
    "rebase",
    "substitute",
    "take_limit",
]
