"""Closed-form twisted Poincare coproducts."""
from dataclasses import dataclass
from typing import Tuple

from ..series import Parameter
from .expressions import (
    I_UNIT,
    Comm,
    Delta0,
    Eta,
    Gen,
    Neg,
    Node,
    Otimes,
    Par,
    Perp,
    Prod,
    PsiChi,
    Series,
    Sum,
    Wedge,
)


@dataclass(frozen=True)
class CatalogEntry:
    """Closed form of one coproduct family.

    ``selector`` picks the generators it covers: a kind (``P``, ``M``, ``Pi``,
    ``K``, ``V``) or ``Pi0`` / ``Pia`` for the time and space components.
    ``free`` names the context variables bound from the generator indices.
    ``equation`` is the tag of the printed formula.
    """

    key: str
    equation: str
    deformation: str
    selector: str
    free: Tuple[str, ...]
    expression: Node
    algebra: str = "poincare"
    notes: Tuple[str, ...] = ()

    @property
    def pattern(self) -> str:
        if self.selector == "Pi0":
            return "Pi_0"
        kind = "Pi" if self.selector == "Pia" else self.selector
        return f"{kind}_{''.join(self.free)}"


def P(index) -> Gen:
    return Gen("P", index)


M_MUNU = Gen("M", "mu", "nu")
M_I0 = Gen("M", "i", 0)
M_KL = Gen("M", "k", "l")


def boost_shift(x) -> Node:
    """eta_{x mu} P_nu - eta_{x nu} P_mu"""
    return Sum(Prod(Eta(x, "mu"), P("nu")), Neg(Prod(Eta(x, "nu"), P("mu"))))


def canonical_block(param: Parameter, a, b) -> Node:
    """Correction of D0(M_mu_nu) under exp(i theta P_a ^ P_b)."""
    theta = Par(param)
    return Sum(
        Neg(Prod(theta, Sum(Otimes(boost_shift(a), P(b)), Otimes(P(a), boost_shift(b))))),
        Prod(theta, Sum(Otimes(boost_shift(b), P(a)), Otimes(P(b), boost_shift(a)))),
    )


def canonical_m(param: Parameter, a, b) -> Node:
    return Sum(Delta0(M_MUNU), canonical_block(param, a, b))


# kappa family: exp((i/2kappa) P_k ^ M_i0)

KAPPA = Par(Parameter.INV_KAPPA, "1/2")
SINH_K = Series("sinh", KAPPA, P("k"))
COSH_K = Series("cosh_minus_1", KAPPA, P("k"))
C1_KAPPA = Comm(M_MUNU, M_I0)
C2_KAPPA = Comm(C1_KAPPA, M_I0)
PSI_K = PsiChi("psi", "delta", "k")
CHI_K = PsiChi("chi", "delta", "k")

KAPPA_P = Sum(
    Delta0(P("mu")),
    Wedge(SINH_K, Sum(Prod(Eta("i", "mu"), P(0)), Neg(Prod(Eta(0, "mu"), P("i"))))),
    Perp(COSH_K, Sum(Prod(Eta("i", "mu"), P("i")), Neg(Prod(Eta(0, "mu"), P(0))))),
)

KAPPA_M_TERMS = (
    Prod(KAPPA, Wedge(M_I0, boost_shift("k"))),
    Wedge(Prod(I_UNIT, C1_KAPPA), SINH_K),
    Neg(Perp(C2_KAPPA, COSH_K)),
    Prod(KAPPA, Perp(Prod(M_I0, SINH_K), Sum(Prod(PSI_K, P("i")), Neg(Prod(CHI_K, P(0)))))),
    Neg(Prod(KAPPA, Wedge(Sum(Prod(PSI_K, P(0)), Neg(Prod(CHI_K, P("i")))), Prod(M_I0, COSH_K)))),
)

KAPPA_M = Sum(Delta0(M_MUNU), *KAPPA_M_TERMS)


# rotation families: exp((i/2kappa_hat) P_0 ^ M_kl) and exp((i/2kappa_bar) P_i ^ M_kl)

C1_ROT = Comm(M_MUNU, M_KL)
C2_ROT = Comm(C1_ROT, M_KL)


def rotation_p(coeff: Node, axis) -> Node:
    return Sum(
        Delta0(P("mu")),
        Wedge(Series("sin", coeff, P(axis)), Sum(Prod(Eta("k", "mu"), P("l")), Neg(Prod(Eta("l", "mu"), P("k"))))),
        Perp(Series("cos_minus_1", coeff, P(axis)), Sum(Prod(Eta("k", "mu"), P("k")), Prod(Eta("l", "mu"), P("l")))),
    )


def rotation_m_terms(coeff: Node, axis) -> Tuple[Node, ...]:
    sin = Series("sin", coeff, P(axis))
    cos = Series("cos_minus_1", coeff, P(axis))
    psi = PsiChi("psi", "eta", axis)
    chi = PsiChi("chi", "eta", axis)
    return (
        Prod(coeff, Wedge(M_KL, boost_shift(axis))),
        Wedge(Prod(I_UNIT, C1_ROT), sin),
        Perp(C2_ROT, cos),
        Prod(coeff, Perp(Prod(M_KL, sin), Sum(Prod(psi, P("k")), Neg(Prod(chi, P("l")))))),
        Prod(coeff, Wedge(Sum(Prod(psi, P("l")), Prod(chi, P("k"))), Prod(M_KL, cos))),
    )


KAPPA_HAT = Par(Parameter.INV_KAPPA_HAT, "1/2")
KAPPA_BAR = Par(Parameter.INV_KAPPA_BAR, "1/2")


# generalized cross terms

THETA_KL = Par(Parameter.THETA_KL)
THETA_0I = Par(Parameter.THETA_0I)
I_THETA_KL = Prod(I_UNIT, THETA_KL)
I_THETA_0I = Prod(I_UNIT, THETA_0I)

THETA_KAPPA_CROSS = (
    Prod(THETA_KL, Perp(Comm(C1_KAPPA, P("k")), Prod(SINH_K, P("l")))),
    Neg(Prod(THETA_KL, Perp(Comm(C1_KAPPA, P("l")), Prod(SINH_K, P("k"))))),
    Prod(I_THETA_KL, Wedge(Comm(C2_KAPPA, P("k")), Prod(COSH_K, P("l")))),
    Neg(Prod(I_THETA_KL, Wedge(Comm(C2_KAPPA, P("l")), Prod(COSH_K, P("k"))))),
)


def theta_rotation_cross(coeff: Node, axis, first, second) -> Tuple[Node, ...]:
    """theta_0i cross terms; ``first`` multiplies sin against [[M, M_kl], P_0] and ``second`` against P_i."""
    sin = Series("sin", coeff, P(axis))
    cos = Series("cos_minus_1", coeff, P(axis))
    return (
        Prod(THETA_0I, Perp(Comm(C1_ROT, P(0)), Prod(sin, P(first)))),
        Neg(Prod(THETA_0I, Perp(Comm(C1_ROT, P("i")), Prod(sin, P(second))))),
        Neg(Prod(I_THETA_0I, Wedge(Comm(C2_ROT, P(0)), Prod(cos, P(first))))),
        Prod(I_THETA_0I, Wedge(Comm(C2_ROT, P("i")), Prod(cos, P(second)))),
    )


RAISED_THETA_NOTE = ("theta^{kl} printed with raised indices in the first canonical line is read as theta_kl; "
                     "the indices are spatial, so raising with eta changes nothing")
PERP_SIGN_NOTE = ("the [[M_mu_nu, X], X] _|_ (f - 1) term carries a minus sign in the kappa entries and a plus "
                  "sign in the rotation entries; the engine coproduct decides which sign the twist produces")

POINCARE_ENTRIES: Tuple[CatalogEntry, ...] = (
    CatalogEntry("coproduct/theta_kl/P", "dlww3v", "theta_kl", "P", ("mu",), Delta0(P("mu"))),
    CatalogEntry("coproduct/theta_kl/M", "zadruzny", "theta_kl", "M", ("mu", "nu"),
                 canonical_m(Parameter.THETA_KL, "k", "l")),
    CatalogEntry("coproduct/theta_0i/P", "zcoppy1", "theta_0i", "P", ("mu",), Delta0(P("mu"))),
    CatalogEntry("coproduct/theta_0i/M", "zcoppy100", "theta_0i", "M", ("mu", "nu"),
                 canonical_m(Parameter.THETA_0I, 0, "i")),
    CatalogEntry("coproduct/kappa/P", "coppy1", "kappa", "P", ("mu",), KAPPA_P),
    CatalogEntry("coproduct/kappa/M", "coppy100", "kappa", "M", ("mu", "nu"), KAPPA_M, notes=(PERP_SIGN_NOTE,)),
    CatalogEntry("coproduct/kappa_hat/P", "czartworfff", "kappa_hat", "P", ("mu",),
                 rotation_p(KAPPA_HAT, 0)),
    CatalogEntry("coproduct/kappa_hat/M", "czartworcopp2", "kappa_hat", "M", ("mu", "nu"),
                 Sum(Delta0(M_MUNU), *rotation_m_terms(KAPPA_HAT, 0)), notes=(PERP_SIGN_NOTE,)),
    CatalogEntry("coproduct/kappa_bar/P", "nowageneracja1", "kappa_bar", "P", ("mu",),
                 rotation_p(KAPPA_BAR, "i")),
    CatalogEntry("coproduct/kappa_bar/M", "nowageneracja3", "kappa_bar", "M", ("mu", "nu"),
                 Sum(Delta0(M_MUNU), *rotation_m_terms(KAPPA_BAR, "i"))),
    CatalogEntry("coproduct/theta_kl+kappa/P", "coa1", "theta_kl+kappa", "P", ("mu",), KAPPA_P),
    CatalogEntry("coproduct/theta_kl+kappa/M", "coa100", "theta_kl+kappa", "M", ("mu", "nu"),
                 Sum(Delta0(M_MUNU), *KAPPA_M_TERMS, canonical_block(Parameter.THETA_KL, "k", "l"),
                     *THETA_KAPPA_CROSS),
                 notes=(RAISED_THETA_NOTE, PERP_SIGN_NOTE)),
    CatalogEntry("coproduct/theta_0i+kappa_hat/P", "nextczartworfff", "theta_0i+kappa_hat", "P", ("mu",),
                 rotation_p(KAPPA_HAT, 0)),
    CatalogEntry("coproduct/theta_0i+kappa_hat/M", "nextczartworcopp2", "theta_0i+kappa_hat", "M", ("mu", "nu"),
                 Sum(Delta0(M_MUNU), *rotation_m_terms(KAPPA_HAT, 0), canonical_block(Parameter.THETA_0I, 0, "i"),
                     *theta_rotation_cross(KAPPA_HAT, 0, "i", 0))),
    CatalogEntry("coproduct/theta_0i+kappa_bar/P", "nextnowageneracja1", "theta_0i+kappa_bar", "P", ("mu",),
                 rotation_p(KAPPA_BAR, "i")),
    CatalogEntry("coproduct/theta_0i+kappa_bar/M", "nextnowageneracja3", "theta_0i+kappa_bar", "M", ("mu", "nu"),
                 Sum(Delta0(M_MUNU), *rotation_m_terms(KAPPA_BAR, "i"), canonical_block(Parameter.THETA_0I, 0, "i"),
                     *theta_rotation_cross(KAPPA_BAR, "i", "i", 0))),
)
