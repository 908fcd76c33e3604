"""Equation tags of the printed forms each check is compared against."""
from typing import Dict

from ..deformations import DeformationId, get_spec

RMATRIX: Dict[DeformationId, str] = {
    DeformationId.THETA_KL: "grmatix1",
    DeformationId.THETA_0I: "grmatix2",
    DeformationId.KAPPA: "grmatix3",
    DeformationId.KAPPA_HAT: "grmatix4",
    DeformationId.KAPPA_BAR: "grmatix5",
    DeformationId.THETA_KL_KAPPA: "rge1",
    DeformationId.THETA_0I_KAPPA_HAT: "rge2",
    DeformationId.THETA_0I_KAPPA_BAR: "rge3",
}

# superposed twists are printed only as exp(i r), so they carry their r-matrix tag
TWIST: Dict[DeformationId, str] = {
    DeformationId.THETA_KL: "gfactor",
    DeformationId.THETA_0I: "fggfactor",
    DeformationId.KAPPA: "dghfactor",
    DeformationId.KAPPA_HAT: "czartwor500",
    DeformationId.KAPPA_BAR: "czartwor600",
    DeformationId.THETA_KL_KAPPA: "rge1",
    DeformationId.THETA_0I_KAPPA_HAT: "rge2",
    DeformationId.THETA_0I_KAPPA_BAR: "rge3",
}

SECOND_LEG_COCYCLE: Dict[DeformationId, str] = {
    DeformationId.THETA_KL_KAPPA: "cocyclefnext",
    DeformationId.THETA_0I_KAPPA_HAT: "cocyclefnext",
    DeformationId.THETA_0I_KAPPA_BAR: "kolejnycocyclefnext",
}

SPACETIME: Dict[DeformationId, str] = {
    DeformationId.THETA_KL_KAPPA: "st1",
    DeformationId.THETA_0I_KAPPA_HAT: "st2",
    DeformationId.THETA_0I_KAPPA_BAR: "st3",
}

CYBE = "cybe"
COCYCLE = "cocyclef"
NORMALIZATION = "normalizationhh"
NORMALIZATION_NEXT = "normalizationhhnext"
TWISTED_COPRODUCT = "fs"
ANTIPODES = "zadruga1"
POINCARE_ALGEBRA = "nnn"
GALILEI_ALGEBRA = "nnnga"
CONTRACTION = "contr2"


def rmatrix_equation(deformation) -> str:
    return RMATRIX[get_spec(deformation).id]


def twist_equation(deformation) -> str:
    return TWIST[get_spec(deformation).id]


def normalization_equation(deformation) -> str:
    return NORMALIZATION_NEXT if get_spec(deformation).generalized else NORMALIZATION


def second_leg_equation(deformation) -> str:
    return SECOND_LEG_COCYCLE[get_spec(deformation).id]
