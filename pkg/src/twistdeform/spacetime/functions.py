"""Commutative polynomials in the coordinates x0..x3 over the series ring."""
from typing import Callable, Dict, Mapping, Optional, Tuple

import sympy

from ..algebra import METRIC
from ..series import DEFAULT_ORDER, LaurentSeries, Parameter

Monomial = Tuple[int, int, int, int]

CONSTANT: Monomial = (0, 0, 0, 0)
COORDINATES = tuple(sympy.Symbol(f"x{mu}") for mu in range(4))


def _unit(mu: int) -> Monomial:
    return tuple(1 if n == mu else 0 for n in range(4))


def _monomial_text(m: Monomial) -> str:
    return "*".join(f"x{mu}" if e == 1 else f"x{mu}^{e}" for mu, e in enumerate(m) if e)


class PolyFunction:
    """Polynomial ``sum c_m x^m``; coordinates commute, noncommutativity lives in the star product."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Optional[Mapping[Monomial, LaurentSeries]] = None, order: int = DEFAULT_ORDER):
        self.terms: Dict[Monomial, LaurentSeries] = {tuple(m): c for m, c in (terms or {}).items() if c}
        self.order = order

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "PolyFunction":
        return cls({}, order)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "PolyFunction":
        if not isinstance(value, LaurentSeries):
            value = LaurentSeries.constant(value, order)
        return cls({CONSTANT: value}, order)

    @classmethod
    def coordinate(cls, mu: int, order: int = DEFAULT_ORDER) -> "PolyFunction":
        return cls({_unit(mu): LaurentSeries.one(order)}, order)

    @classmethod
    def monomial(cls, exponents: Monomial, coeff=1, order: int = DEFAULT_ORDER) -> "PolyFunction":
        if not isinstance(coeff, LaurentSeries):
            coeff = LaurentSeries.constant(coeff, order)
        return cls({tuple(exponents): coeff}, order)

    # arithmetic

    def __add__(self, other: "PolyFunction") -> "PolyFunction":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return PolyFunction(out, self.order)

    def __neg__(self) -> "PolyFunction":
        return PolyFunction({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other: "PolyFunction") -> "PolyFunction":
        return self + (-other)

    def scale(self, value) -> "PolyFunction":
        if isinstance(value, LaurentSeries):
            return PolyFunction({m: c * value for m, c in self.terms.items()}, self.order)
        return PolyFunction({m: c.scale(value) for m, c in self.terms.items()}, self.order)

    def __mul__(self, other) -> "PolyFunction":
        if not isinstance(other, PolyFunction):
            return self.scale(other)
        out: Dict[Monomial, LaurentSeries] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return PolyFunction(out, self.order)

    def derivative(self, nu: int) -> "PolyFunction":
        """d_nu with d_nu x_mu = eta_mu_nu."""
        out: Dict[Monomial, LaurentSeries] = {}
        for m, c in self.terms.items():
            if not m[nu]:
                continue
            lowered = tuple(e - 1 if n == nu else e for n, e in enumerate(m))
            value = c.scale(m[nu] * METRIC[nu])
            out[lowered] = out[lowered] + value if lowered in out else value
        return PolyFunction(out, self.order)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyFunction):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def coefficient(self, exponents: Monomial) -> LaurentSeries:
        return self.terms.get(tuple(exponents), LaurentSeries.zero(self.order))

    def classical_part(self) -> "PolyFunction":
        """Parameter-free part of every coefficient."""
        return PolyFunction({m: c.homogeneous_part(0) for m, c in self.terms.items()}, self.order)

    def map_coefficients(self, fn: Callable[[LaurentSeries], LaurentSeries]) -> "PolyFunction":
        return PolyFunction({m: fn(c) for m, c in self.terms.items()}, self.order)

    def substitute_zero(self, *params: Parameter) -> "PolyFunction":
        return self.map_coefficients(lambda c: c.substitute_zero(*params))

    # rendering

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            coeff = self.terms[m].to_text()
            if len(self.terms[m].terms) > 1:
                coeff = f"({coeff})"
            name = _monomial_text(m)
            if not name:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(name)
            elif coeff == "-1":
                parts.append(f"-{name}")
            else:
                parts.append(f"{coeff}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_sympy(self) -> sympy.Expr:
        expr = sympy.Integer(0)
        for m, c in self.terms.items():
            term = c.to_sympy()
            for symbol, e in zip(COORDINATES, m):
                term *= symbol ** e
            expr += term
        return sympy.expand(expr)

    def __repr__(self) -> str:
        return f"PolyFunction({self.to_text()})"
