"""Closed-form coproducts of the contracted (Galilei) deformations."""
from typing import Tuple

from ..series import Parameter
from .expressions import (
    I_UNIT,
    Comm,
    Delta0,
    Gen,
    Kron,
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
from .poincare import CatalogEntry


def Pi(index) -> Gen:
    return Gen("Pi", index)


K_AB = Gen("K", "a", "b")
K_KL = Gen("K", "k", "l")
V_A = Gen("V", "a")

XI_KL = Par(Parameter.XI_KL)
XI_0I = Par(Parameter.XI_0I)
I_XI_0I = Prod(I_UNIT, XI_0I)
LAMBDA = Par(Parameter.INV_LAMBDA, "1/2")
LAMBDA_HAT = Par(Parameter.INV_LAMBDA_HAT, "1/2")
LAMBDA_BAR = Par(Parameter.INV_LAMBDA_BAR, "1/2")


def rotation_shift(x) -> Node:
    """delta_{x a} Pi_b - delta_{x b} Pi_a"""
    return Sum(Prod(Kron(x, "a"), Pi("b")), Neg(Prod(Kron(x, "b"), Pi("a"))))


def galilei_canonical_block() -> Node:
    return Sum(
        Neg(Prod(XI_KL, Sum(Otimes(rotation_shift("k"), Pi("l")), Otimes(Pi("k"), rotation_shift("l"))))),
        Prod(XI_KL, Sum(Otimes(rotation_shift("l"), Pi("k")), Otimes(Pi("l"), rotation_shift("k")))),
    )


def momentum_entry(coeff: Node, axis) -> Node:
    sin = Series("sin", coeff, Pi(axis))
    cos = Series("cos_minus_1", coeff, Pi(axis))
    return Sum(
        Delta0(Pi("mu")),
        Wedge(sin, Sum(Prod(Kron("k", "mu"), Pi("l")), Neg(Prod(Kron("l", "mu"), Pi("k"))))),
        Perp(cos, Sum(Prod(Kron("k", "mu"), Pi("k")), Prod(Kron("l", "mu"), Pi("l")))),
    )


C1_K = Comm(K_AB, K_KL)
C2_K = Comm(C1_K, K_KL)
C1_V = Comm(V_A, K_KL)
C2_V = Comm(C1_V, K_KL)


def rotation_k_common(coeff: Node, axis) -> Tuple[Node, ...]:
    sin = Series("sin", coeff, Pi(axis))
    cos = Series("cos_minus_1", coeff, Pi(axis))
    return (
        Wedge(Prod(I_UNIT, C1_K), sin),
        Perp(C2_K, cos),
        Neg(Prod(XI_0I, Wedge(Pi(0), rotation_shift("i")))),
        Neg(Prod(XI_0I, Perp(Comm(C1_K, Pi("i")), Prod(Pi(0), sin)))),
        Prod(I_XI_0I, Wedge(Comm(C2_K, Pi("i")), Prod(Pi(0), cos))),
    )


def rotation_v_common(coeff: Node, axis) -> Tuple[Node, ...]:
    sin = Series("sin", coeff, Pi(axis))
    cos = Series("cos_minus_1", coeff, Pi(axis))
    return (
        Wedge(Prod(I_UNIT, C1_V), sin),
        Perp(C2_V, cos),
        Neg(Prod(XI_0I, Wedge(Pi("a"), Pi("i")))),
        Neg(Prod(I_XI_0I, Wedge(Comm(C2_V, Pi(0)), Prod(cos, Pi("i"))))),
        Prod(XI_0I, Perp(Comm(C1_V, Pi(0)), Prod(sin, Pi("i")))),
    )


HAT_SIN = Series("sin", LAMBDA_HAT, Pi(0))
HAT_COS = Series("cos_minus_1", LAMBDA_HAT, Pi(0))
BAR_SIN = Series("sin", LAMBDA_BAR, Pi("i"))
BAR_COS = Series("cos_minus_1", LAMBDA_BAR, Pi("i"))
PSI_I = PsiChi("psi", "eta", "i", mu="a", nu="b")
CHI_I = PsiChi("chi", "eta", "i", mu="a", nu="b")

GALILEI_ENTRIES: Tuple[CatalogEntry, ...] = (
    CatalogEntry("galilei/xi_kl+lambda/Pi0", "gacoa1", "xi_kl+lambda", "Pi0", ("mu",),
                 Sum(Delta0(Pi(0)), Prod(LAMBDA, Wedge(Pi("k"), Pi("i")))), algebra="galilei"),
    CatalogEntry("galilei/xi_kl+lambda/Pia", "coa0", "xi_kl+lambda", "Pia", ("mu",),
                 Delta0(Pi("mu")), algebra="galilei"),
    CatalogEntry("galilei/xi_kl+lambda/V", "coa0", "xi_kl+lambda", "V", ("a",), Delta0(V_A), algebra="galilei"),
    CatalogEntry("galilei/xi_kl+lambda/K", "gacoa100", "xi_kl+lambda", "K", ("a", "b"),
                 Sum(
                     Delta0(K_AB),
                     Prod(I_UNIT, LAMBDA, Wedge(Comm(K_AB, Gen("V", "i")), Pi("k"))),
                     Prod(LAMBDA, Wedge(Gen("V", "i"), Sum(Prod(Kron("a", "k"), Pi("b")),
                                                           Neg(Prod(Kron("b", "k"), Pi("a")))))),
                     galilei_canonical_block(),
                 ),
                 algebra="galilei"),
    CatalogEntry("galilei/xi_0i+lambda_hat/Pi", "ganextczartworfff", "xi_0i+lambda_hat", "Pi", ("mu",),
                 momentum_entry(LAMBDA_HAT, 0), algebra="galilei"),
    CatalogEntry("galilei/xi_0i+lambda_hat/K", "ganextczartworfff100", "xi_0i+lambda_hat", "K", ("a", "b"),
                 Sum(Delta0(K_AB), *rotation_k_common(LAMBDA_HAT, 0)), algebra="galilei"),
    CatalogEntry("galilei/xi_0i+lambda_hat/V", "ganextczartworcopp2", "xi_0i+lambda_hat", "V", ("a",),
                 Sum(
                     Delta0(V_A),
                     Prod(LAMBDA_HAT, Wedge(K_KL, Pi("a"))),
                     Perp(Prod(K_KL, HAT_SIN),
                          Prod(LAMBDA_HAT, Sum(Prod(Kron("k", "a"), Pi("l")), Neg(Prod(Kron("l", "a"), Pi("k")))))),
                     Neg(Prod(LAMBDA_HAT, Wedge(Sum(Prod(Kron("k", "a"), Pi("k")), Prod(Kron("l", "a"), Pi("l"))),
                                                Prod(K_KL, HAT_COS)))),
                     *rotation_v_common(LAMBDA_HAT, 0),
                 ),
                 algebra="galilei"),
    CatalogEntry("galilei/xi_0i+lambda_bar/Pi", "genextnowageneracja1", "xi_0i+lambda_bar", "Pi", ("mu",),
                 momentum_entry(LAMBDA_BAR, "i"), algebra="galilei"),
    CatalogEntry("galilei/xi_0i+lambda_bar/K", "genextnowageneracja2", "xi_0i+lambda_bar", "K", ("a", "b"),
                 Sum(
                     Delta0(K_AB),
                     Wedge(K_KL, Prod(LAMBDA_BAR, rotation_shift("i"))),
                     Perp(Prod(K_KL, BAR_SIN),
                          Prod(LAMBDA_BAR, Sum(Prod(PSI_I, Pi("k")), Neg(Prod(CHI_I, Pi("l")))))),
                     Prod(LAMBDA_BAR, Wedge(Sum(Prod(PSI_I, Pi("l")), Prod(CHI_I, Pi("k"))), Prod(K_KL, BAR_COS))),
                     *rotation_k_common(LAMBDA_BAR, "i"),
                 ),
                 algebra="galilei"),
    CatalogEntry("galilei/xi_0i+lambda_bar/V", "genextnowageneracja3", "xi_0i+lambda_bar", "V", ("a",),
                 Sum(Delta0(V_A), *rotation_v_common(LAMBDA_BAR, "i")), algebra="galilei"),
)
