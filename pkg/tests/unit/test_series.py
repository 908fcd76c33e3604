"""Unit tests for exact coefficients and truncated series."""
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from src.twistdeform.series import (
    IMAG,
    LaurentSeries,
    ONE,
    Parameter,
    format_gaussian,
    gaussian,
    series_limit_c_to_infinity,
    series_mul,
)
from src.twistdeform.series import DivergenceError, SeriesError, TruncationOrderMismatchError


class TestGaussianRationals:
    """Tests for the coefficient field."""

    def test_format_real_and_imaginary(self):
        """Canonical text for pure, mixed and fractional values."""
        assert format_gaussian(gaussian("3/2")) == "3/2"
        assert format_gaussian(gaussian(0, -1)) == "-i"
        assert format_gaussian(gaussian(0, "1/2")) == "1/2*i"
        assert format_gaussian(gaussian("1/2", 1)) == "(1/2+i)"
        assert format_gaussian(gaussian(1, -2)) == "(1-2*i)"

    def test_i_squared_is_minus_one(self):
        """i * i = -1 exactly."""
        assert IMAG * IMAG == -ONE


class TestLaurentSeries:
    """Tests for truncated multivariate series."""

    def test_products_above_the_order_are_dropped(self):
        """theta^3 vanishes at order 2 and marks the result truncated."""
        p = LaurentSeries.parameter(Parameter.THETA_KL, order=2)
        cube = p * p * p
        assert cube.is_zero()
        assert cube.truncated

    def test_order_mismatch_raises(self):
        """Operands with different truncation orders are a configuration error."""
        with pytest.raises(TruncationOrderMismatchError, match="2 vs 3"):
            LaurentSeries.one(2) + LaurentSeries.one(3)

    def test_negative_parameter_exponent_rejected(self):
        """Only 1/c may carry negative exponents."""
        with pytest.raises(SeriesError, match="theta_kl"):
            LaurentSeries.monomial({Parameter.THETA_KL: -1})

    def test_inverse_c_is_not_counted_in_the_degree(self):
        """1/c is bookkeeping and survives any truncation order."""
        s = LaurentSeries.monomial({Parameter.INV_C: 5, Parameter.THETA_KL: 1}, order=1)
        assert not s.is_zero()
        assert s.max_degree() == 1

    def test_text_of_inverse_parameters(self):
        """1/kappa prints as a negative power of kappa."""
        s = LaurentSeries.parameter(Parameter.INV_KAPPA, gaussian("1/2"))
        assert s.to_text() == "1/2*kappa^-1"
        assert (LaurentSeries.parameter(Parameter.THETA_KL) * LaurentSeries.parameter(Parameter.THETA_KL)).to_text() \
            == "theta_kl^2"

    def test_equality_is_structural(self):
        """theta + theta == 2 theta, and a series equals a matching constant."""
        p = LaurentSeries.parameter(Parameter.THETA_KL)
        assert p + p == p.scale(2)
        assert LaurentSeries.constant(3) == 3
        assert series_mul(p, LaurentSeries.one()) == p

    def test_substitute_zero(self):
        """Setting theta to zero keeps the 1/kappa terms only."""
        s = LaurentSeries.parameter(Parameter.THETA_KL) + LaurentSeries.parameter(Parameter.INV_KAPPA)
        assert s.substitute_zero(Parameter.THETA_KL) == LaurentSeries.parameter(Parameter.INV_KAPPA)

    def test_substitute_parameters_with_c_powers(self):
        """1/kappa -> (1/lambda) c^-1 moves one power into the 1/c slot."""
        s = LaurentSeries.parameter(Parameter.INV_KAPPA)
        image = s.substitute_parameters({Parameter.INV_KAPPA: (Parameter.INV_LAMBDA, -1)})
        assert image == LaurentSeries.monomial({Parameter.INV_LAMBDA: 1, Parameter.INV_C: 1})
        assert image.c_powers() == (-1,)

    def test_limit_drops_negative_powers_of_c(self):
        """1 + 1/c tends to 1."""
        s = LaurentSeries.one() + LaurentSeries.monomial({Parameter.INV_C: 1})
        assert series_limit_c_to_infinity(s) == LaurentSeries.one()

    def test_limit_diverges_on_positive_powers_of_c(self):
        """A surviving c^1 raises with the offending term attached."""
        s = LaurentSeries.monomial({Parameter.INV_C: -1}, coeff=2)
        with pytest.raises(DivergenceError) as info:
            s.limit_c_to_infinity()
        assert info.value.term == "2*c"

    def test_to_sympy(self):
        """theta_kl / 2 becomes a sympy expression in a positive symbol."""
        s = LaurentSeries.parameter(Parameter.THETA_KL, gaussian("1/2"))
        assert s.to_sympy() == sympy.Rational(1, 2) * sympy.Symbol("theta_kl", positive=True)


# small random series in two deformation parameters and 1/c, truncated at order 3
coefficients = st.builds(gaussian, st.integers(-3, 3), st.integers(-3, 3))


def random_series(lowest_inverse_c=-1):
    powers = st.fixed_dictionaries({
        Parameter.THETA_KL: st.integers(0, 2),
        Parameter.INV_KAPPA: st.integers(0, 2),
        Parameter.INV_C: st.integers(lowest_inverse_c, 2),
    })
    return st.lists(st.tuples(powers, coefficients), max_size=4).map(
        lambda terms: sum((LaurentSeries.monomial(p, c, order=3) for p, c in terms), LaurentSeries.zero(3))
    )


series = random_series()


class TestSeriesProperties:
    """Ring axioms and truncation laws on random small series."""

    @given(a=series, b=series, c=series)
    def test_multiplication_is_associative(self, a, b, c):
        """(ab)c == a(bc) after truncation."""
        assert (a * b) * c == a * (b * c)

    @given(a=series, b=series, c=series)
    def test_multiplication_distributes(self, a, b, c):
        """a(b + c) == ab + ac and (a + b)c == ac + bc."""
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @given(a=series, b=series)
    def test_multiplication_commutes(self, a, b):
        """The parameters are commuting symbols."""
        assert a * b == b * a

    @given(a=series, degree=st.integers(0, 3))
    def test_truncation_is_idempotent(self, a, degree):
        """Truncating twice at the same degree equals truncating once."""
        once = a.truncate(degree)
        assert once.truncate(degree) == once
        assert once.max_degree() <= degree

    @given(a=random_series(lowest_inverse_c=0), b=series)
    def test_limit_commutes_with_c_free_factors(self, a, b):
        """lim(a k) == lim(a) k when a has no positive power of c and k has no c at all."""
        k = b.substitute_zero(Parameter.INV_C)
        assert series_limit_c_to_infinity(a * k) == series_limit_c_to_infinity(a) * k
