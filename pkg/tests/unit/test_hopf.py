"""Unit tests for twist factors, twisted coproducts and the Hopf-algebra checks."""
import itertools

import pytest

from src.twistdeform.algebra import UEAElement
from src.twistdeform.deformations import ALL_DEFORMATIONS, canonical_indices
from src.twistdeform.hopf import (
    HopfStructure,
    TensorElement,
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
    twist_inverse,
    twisted_hopf,
    undeformed_antipode_residual,
    wedge,
)
from src.twistdeform.series import IMAG, LaurentSeries, Parameter

# small order keeps the rank-3 checks quick; every identity here holds at all orders
ORDER = 3


def twist(name, order=ORDER):
    return build_twist(name, canonical_indices(name), order)


class TestTwistFactors:
    """Tests for twist construction."""

    def test_theta_kl_exponent(self, gen):
        """exp(i theta P1 ^ P2) for k=1, l=2."""
        F = build_twist("theta_kl", {"k": 1, "l": 2})
        expected = wedge(gen("P", 1), gen("P", 2)).scale(LaurentSeries.parameter(Parameter.THETA_KL, IMAG))
        assert F.exponent == expected
        assert F.skew
        assert F.carrier_abelian

    def test_inverse_multiplies_to_one(self, poincare):
        """F * F^-1 = 1 (x) 1 for a Lie-algebraic twist."""
        F = twist("kappa")
        forward, _ = F.expand()
        assert forward * twist_inverse(F) == TensorElement.unit(poincare, 2, ORDER)

    @pytest.mark.parametrize("name", [d.value for d in ALL_DEFORMATIONS])
    def test_cocycle(self, name):
        """Every catalog twist satisfies the 2-cocycle condition."""
        outcome = check_cocycle(twist(name))
        assert outcome.passed, outcome.residual

    @pytest.mark.parametrize("name", [d.value for d in ALL_DEFORMATIONS])
    def test_normalization(self, name):
        """(e (x) 1)F = (1 (x) e)F = 1, exactly."""
        outcome = check_normalization(twist(name))
        assert outcome.passed
        assert outcome.exactness == "exact"

    @pytest.mark.parametrize("name", [d.value for d in ALL_DEFORMATIONS])
    def test_sweedler_element_is_one(self, name):
        """u = 1, so antipodes stay undeformed."""
        outcome = check_sweedler_u(twist(name))
        assert outcome.passed
        assert outcome.exact

    def test_control_fails_at_second_order(self):
        """exp(xi P1 (x) M12) is not a twist: the residual starts at xi^2."""
        outcome = check_cocycle(control_twist(ORDER))
        assert not outcome.passed
        assert "xi_kl^2" in outcome.residual

    @pytest.mark.parametrize("first,second", [("theta_kl", "kappa"), ("kappa", "theta_kl")])
    def test_second_leg_cocycle(self, first, second):
        """Each component of theta_kl+kappa is a cocycle over the coproduct deformed by the other."""
        indices = {"k": 1, "l": 2, "i": 3}
        outcome = check_second_leg_cocycle(first, second, indices, ORDER)
        assert outcome.passed, outcome.residual


class TestTwistedCoproducts:
    """Tests for F D0 F^-1 on generators."""

    def test_theta_kl_leaves_momenta_primitive(self, gid):
        """Momenta commute with the canonical twist."""
        hopf = twisted_hopf(build_twist("theta_kl", {"k": 1, "l": 2}))
        for mu in range(4):
            assert hopf.coproduct[gid("P", mu)] == classical_coproduct(gid("P", mu))
            assert hopf.exact[gid("P", mu)]

    def test_theta_kl_rotation(self, gen, gid, theta):
        """D(M13) = D0(M13) + theta P2 ^ P3 for k=1, l=2, exactly."""
        hopf = twisted_hopf(build_twist("theta_kl", {"k": 1, "l": 2}))
        expected = classical_coproduct(gid("M", 1, 3)) + wedge(gen("P", 2), gen("P", 3)).scale(theta)
        assert hopf.coproduct[gid("M", 1, 3)] == expected
        assert hopf.exact[gid("M", 1, 3)]

    def test_single_generator(self, poincare, gen, gid, theta):
        """exp(ad X) on one primitive coproduct stops after the first term."""
        F = build_twist("theta_kl", {"k": 1, "l": 2})
        twisted = twist_coproduct(F, HopfStructure.primitive(poincare), gid("M", 1, 3))
        assert twisted.value == classical_coproduct(gid("M", 1, 3)) + wedge(gen("P", 2), gen("P", 3)).scale(theta)
        assert twisted.exact

    def test_trivial_twist(self, poincare, gid):
        """F = 1 (x) 1 leaves the primitive structure alone."""
        F = trivial_twist()
        assert check_cocycle(F).passed
        hopf = twisted_hopf(F)
        assert hopf.coproduct[gid("M", 0, 1)] == classical_coproduct(gid("M", 0, 1))
        u, exact = sweedler_u(F)
        assert u == UEAElement.unit(poincare)
        assert exact

    def test_primitive_structure(self, poincare, gid):
        """The undeformed structure has S(g) = -g."""
        hopf = HopfStructure.primitive(poincare)
        assert undeformed_antipode_residual(hopf, gid("M", 0, 3)).is_zero()


@pytest.fixture(scope="module")
def kappa_hopf():
    """Twisted structure of the kappa deformation at canonical indices."""
    return twisted_hopf(twist("kappa"))


class TestHopfAxioms:
    """Tests for counit, coassociativity, homomorphism and antipode axioms on twisted coproducts."""

    def test_counit(self, kappa_hopf):
        """(e (x) 1)D(g) = g on every generator."""
        for g in kappa_hopf.algebra.generators:
            assert check_counit(kappa_hopf, g).passed

    def test_coassociativity(self, kappa_hopf):
        """(D (x) 1)D = (1 (x) D)D on every generator."""
        for g in kappa_hopf.algebra.generators:
            assert check_coassociativity(kappa_hopf, g).passed

    def test_homomorphism(self, kappa_hopf, gid):
        """D respects brackets touching the twist carrier."""
        carrier = [gid("P", 1), gid("M", 0, 3), gid("P", 0), gid("M", 1, 3)]
        for a, b in itertools.combinations(carrier, 2):
            outcome = check_homomorphism(kappa_hopf, a, b)
            assert outcome.passed, outcome.residual

    def test_antipode_axiom(self, kappa_hopf):
        """m (S (x) 1) D(g) = 0 on generators."""
        for g in kappa_hopf.algebra.generators:
            assert check_antipode_axiom(kappa_hopf, g).passed

    def test_antipodes_undeformed(self, kappa_hopf):
        """S(g) = -g for every generator."""
        for g in kappa_hopf.algebra.generators:
            assert undeformed_antipode_residual(kappa_hopf, g).is_zero()
