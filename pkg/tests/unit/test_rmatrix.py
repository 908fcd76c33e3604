"""Unit tests for classical r-matrices and the Schouten bracket."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.twistdeform.algebra import AlgebraMismatchError, build_poincare
from src.twistdeform.deformations import ALL_DEFORMATIONS, admissible_indices
from src.twistdeform.rmatrix import (
    RMatrix,
    abelian_rmatrices,
    build_rmatrix,
    check_cybe,
    control_rmatrix,
    schouten_bracket,
    trivector_coefficient,
)
from src.twistdeform.series import LaurentSeries, gaussian


class TestRMatrices:
    """Tests for r-matrix construction."""

    def test_kappa_bivector(self):
        """(1/2kappa) P1 ^ M30 is stored as -(1/2kappa) P1 ^ M03."""
        r = build_rmatrix("kappa", {"i": 3, "k": 1})
        assert r.to_text() == "(-1/2*kappa^-1)*P1^M03"

    def test_superposed_bivector(self):
        """theta_kl+kappa carries both terms."""
        r = build_rmatrix("theta_kl+kappa", {"k": 1, "l": 2, "i": 3})
        assert r.to_text() == "(theta_kl)*P1^P2 + (-1/2*kappa^-1)*P1^M03"
        assert [str(g) for g in r.generators()] == ["P1", "P2", "M03"]


class TestClassicalYangBaxter:
    """Tests for [[r, r]] = 0."""

    @pytest.mark.parametrize("name", [d.value for d in ALL_DEFORMATIONS])
    def test_every_admissible_assignment(self, name):
        """All catalog r-matrices solve the CYBE exactly, for every index choice."""
        for indices in admissible_indices(name):
            outcome = check_cybe(build_rmatrix(name, indices))
            assert outcome.passed, f"{indices}: {outcome.residual}"
            assert outcome.exactness == "exact"

    def test_control_has_nonzero_bracket(self, gid):
        """[[P1 ^ M12, P1 ^ M12]] = -12 i P1 ^ P2 ^ M12 with weight-1 wedges."""
        r = control_rmatrix()
        bracket = schouten_bracket(r, r)
        assert not check_cybe(r).passed
        assert trivector_coefficient(bracket, gid("P", 1), gid("P", 2), gid("M", 1, 2)) == "-12*i"
        assert trivector_coefficient(bracket, gid("P", 2), gid("P", 1), gid("M", 1, 2)) == "12*i"

    def test_abelian_bivectors(self):
        """Any wedge of two commuting generators solves the CYBE."""
        rs = abelian_rmatrices()
        assert rs
        assert all(check_cybe(r).passed for r in rs)

    def test_algebra_mismatch(self, galilei):
        """Brackets across algebras are refused."""
        with pytest.raises(AlgebraMismatchError):
            schouten_bracket(control_rmatrix(), RMatrix(galilei))


scalars = st.builds(gaussian, st.integers(-2, 2), st.integers(-2, 2))
position_pairs = st.sampled_from(list(itertools.combinations(range(10), 2)))
bivectors = st.dictionaries(
    position_pairs, scalars.map(LaurentSeries.constant), max_size=3,
).map(lambda terms: RMatrix(build_poincare(), terms))


class TestSchoutenBracketProperties:
    """Algebraic laws of [[r, s]] on random small bivectors."""

    @settings(deadline=None)
    @given(r=bivectors, s=bivectors, t=bivectors, a=scalars, b=scalars)
    def test_bilinear(self, r, s, t, a, b):
        """[[a r + b s, t]] = a [[r, t]] + b [[s, t]]."""
        combined = schouten_bracket(r.scale(a) + s.scale(b), t)
        assert combined == schouten_bracket(r, t).scale(a) + schouten_bracket(s, t).scale(b)

    @settings(deadline=None)
    @given(r=bivectors, s=bivectors)
    def test_symmetric(self, r, s):
        """[[r, s]] = [[s, r]] for bivectors."""
        assert schouten_bracket(r, s) == schouten_bracket(s, r)
