"""Unit tests for the closed-form catalog."""
from dataclasses import replace

import pytest

from src.twistdeform.catalog import (
    catalog_coproduct,
    catalog_entries,
    catalog_spacetime,
    compare_to_catalog,
    dump_catalog,
    evaluate_entry,
    find_entry,
    relativistic_parent,
    resolve_deformation,
    rmatrix_equation,
    spacetime_equation,
    taylor_coefficients,
)
from src.twistdeform.catalog.expressions import Neg, Sum
from src.twistdeform.deformations import DeformationId, GalileiDeformationId, UnknownDeformationError
from src.twistdeform.hopf import TensorElement, build_twist, classical_coproduct, twisted_hopf
from src.twistdeform.series import LaurentSeries, Parameter, gaussian
from src.twistdeform.spacetime import PolyFunction


class TestEntries:
    """Tests for entry lookup."""

    def test_keys_are_unique(self):
        """Every entry has its own provenance key."""
        keys = [entry.key for entry in catalog_entries()]
        assert len(keys) == len(set(keys))

    def test_every_entry_cites_an_equation(self, gid):
        """Each entry names the printed formula it transcribes."""
        assert all(entry.equation for entry in catalog_entries())
        assert find_entry("kappa", gid("M", 1, 2)).equation == "coppy100"
        assert find_entry("theta_0i+kappa_hat", gid("M", 0, 3)).equation == "nextczartworcopp2"
        assert find_entry("xi_kl+lambda", gid("Pi", 0)).equation == "gacoa1"

    def test_table_and_rmatrix_equations(self):
        """Single deformations cite the superposed table they are a limit of."""
        assert spacetime_equation("theta_kl+kappa") == "st1"
        assert spacetime_equation("theta_0i") == "st2"
        assert spacetime_equation("kappa_bar") == "st3"
        assert rmatrix_equation("kappa") == "grmatix3"
        assert rmatrix_equation("theta_0i+kappa_bar") == "rge3"

    def test_poincare_lookup(self, gid):
        """Momenta and Lorentz generators have separate entries."""
        assert find_entry("theta_kl", gid("P", 0)).key == "coproduct/theta_kl/P"
        assert find_entry("kappa", gid("M", 1, 2)).key == "coproduct/kappa/M"

    def test_galilei_lookup_falls_back(self, gid):
        """Pi0 and Pia entries where the catalog splits them, a common Pi entry otherwise."""
        assert find_entry("xi_kl+lambda", gid("Pi", 0)).key == "galilei/xi_kl+lambda/Pi0"
        assert find_entry("xi_kl+lambda", gid("Pi", 2)).key == "galilei/xi_kl+lambda/Pia"
        assert find_entry("xi_0i+lambda_hat", gid("Pi", 2)).key == "galilei/xi_0i+lambda_hat/Pi"

    def test_resolution(self):
        """Poincare and Galilei ids resolve; others do not."""
        assert resolve_deformation("kappa") is DeformationId.KAPPA
        assert resolve_deformation("xi_kl+lambda") is GalileiDeformationId.XI_KL_LAMBDA
        assert relativistic_parent(GalileiDeformationId.XI_KL_LAMBDA) is DeformationId.THETA_KL_KAPPA
        with pytest.raises(UnknownDeformationError):
            resolve_deformation("xi")

    def test_taylor_coefficients(self):
        """sinh x = x + x^3/6 + ..."""
        assert taylor_coefficients("sinh", 3) == (gaussian(0), gaussian(1), gaussian(0), gaussian("1/6"))
        with pytest.raises(ValueError, match="tanh"):
            taylor_coefficients("tanh", 2)


class TestCoproducts:
    """Tests for evaluated closed forms against the engine."""

    def test_canonical_momenta_are_primitive(self, gid):
        """D(P_mu) = D0(P_mu) for the theta_kl entry."""
        for mu in range(4):
            assert catalog_coproduct("theta_kl", gid("P", mu)) == classical_coproduct(gid("P", mu))

    @pytest.mark.parametrize("name,indices", [("theta_kl", {"k": 1, "l": 2}), ("theta_0i", {"i": 3})])
    def test_canonical_entries_match_engine(self, name, indices):
        """Canonical closed forms agree with F D0 F^-1 on all ten generators."""
        hopf = twisted_hopf(build_twist(name, indices))
        for g in hopf.algebra.generators:
            diff = compare_to_catalog(hopf.coproduct[g], catalog_coproduct(name, g, indices))
            assert diff.matched, f"{g}: {diff.residual}"

    def test_diff_lists_offending_terms(self, gid):
        """A wrong expectation reports each surviving term."""
        computed = classical_coproduct(gid("P", 1))
        expected = classical_coproduct(gid("P", 2))
        diff = compare_to_catalog(computed, expected)
        assert not diff.matched
        assert len(diff.offending) == 4

    def test_sign_flip_names_the_flipped_term(self, gid, gen, theta):
        """Negating one term of the theta_kl M entry leaves exactly that term, doubled, in the diff."""
        entry = find_entry("theta_kl", gid("M", 1, 3))
        delta0, block = entry.expression.terms
        flipped = replace(entry, expression=Sum(delta0, Sum(block.terms[0], Neg(block.terms[1]))))
        indices = {"k": 1, "l": 2}
        m13 = gid("M", 1, 3)
        computed = twisted_hopf(build_twist("theta_kl", indices)).coproduct[m13]
        assert compare_to_catalog(computed, evaluate_entry(entry, m13, indices)).matched
        diff = compare_to_catalog(computed, evaluate_entry(flipped, m13, indices))
        assert not diff.matched
        expected = TensorElement.otimes(gen("P", 2), gen("P", 3)).scale(theta).scale(2)
        assert diff.offending == (expected.to_text(),)


class TestSpacetimeTables:
    """Tests for printed commutator tables."""

    def test_theta_kl_kappa(self):
        """[x1,x2] = 2i theta, [x0,x1] = (i/kappa) x3, [x1,x3] = -(i/kappa) x0 at k=1, l=2, i=3."""
        table = catalog_spacetime("theta_kl+kappa", {"k": 1, "l": 2, "i": 3})
        i_over_kappa = LaurentSeries.parameter(Parameter.INV_KAPPA, gaussian(0, 1))
        assert table[(1, 2)] == PolyFunction.constant(LaurentSeries.parameter(Parameter.THETA_KL, gaussian(0, 2)))
        assert table[(0, 1)] == PolyFunction.coordinate(3).scale(i_over_kappa)
        assert table[(1, 3)] == PolyFunction.coordinate(0).scale(-i_over_kappa)
        assert table[(2, 1)] == -table[(1, 2)]
        assert table[(0, 2)].is_zero()

    def test_single_table_is_a_limit(self):
        """theta_kl alone keeps only the constant commutator."""
        table = catalog_spacetime("theta_kl", {"k": 1, "l": 2})
        nonzero = sorted(key for key, value in table.items() if not value.is_zero())
        assert nonzero == [(1, 2), (2, 1)]

    def test_dump(self):
        """The dump carries every entry plus one table per deformation."""
        items = dump_catalog()
        keys = [item["key"] for item in items]
        assert "coproduct/theta_kl/P" in keys
        assert "spacetime/theta_0i+kappa_bar" in keys
        assert len(items) == len(catalog_entries()) + 8
        by_key = {item["key"]: item for item in items}
        assert by_key["coproduct/kappa_hat/M"]["equation"] == "czartworcopp2"
        assert by_key["spacetime/theta_0i+kappa_hat"]["equation"] == "st2"
