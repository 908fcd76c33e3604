"""Hopf package re-exports for easy imports from `src.twistdeform.hopf`."""
from .hopf import (
    CheckOutcome,
    HopfStructure,
    TwistFactor,
    TwistedCoproduct,
    build_twist,
    check_antipode_axiom,
    check_coassociativity,
    check_cocycle,
    check_counit,
    check_homomorphism,
    check_normalization,
    check_second_leg_cocycle,
    check_sweedler_u,
    classical_coproduct,
    control_twist,
    sweedler_u,
    trivial_twist,
    twist_coproduct,
    twist_from_exponent,
    twist_inverse,
    twisted_hopf,
    undeformed_antipode_residual,
)
from .tensor import TensorElement, exponential, perp, wedge

__all__ = [
    "CheckOutcome",
    "HopfStructure",
    "TensorElement",
    "TwistFactor",
    "TwistedCoproduct",
    "build_twist",
    "check_antipode_axiom",
    "check_coassociativity",
    "check_cocycle",
    "check_counit",
    "check_homomorphism",
    "check_normalization",
    "check_second_leg_cocycle",
    "check_sweedler_u",
    "classical_coproduct",
    "control_twist",
    "exponential",
    "perp",
    "sweedler_u",
    "trivial_twist",
    "twist_coproduct",
    "twist_from_exponent",
    "twist_inverse",
    "twisted_hopf",
    "undeformed_antipode_residual",
    "wedge",
]
