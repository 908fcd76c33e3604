"""Expression trees for closed-form coproducts.

Nodes evaluate against an ``EvalContext`` to one of three value kinds: a
``LaurentSeries`` (scalars, metric and Kronecker symbols, psi/chi
coefficients), a ``UEAElement`` (generators, commutators, series functions)
or a ``TensorElement`` (wedge, perp, otimes, primitive coproduct). ``Prod``
and ``Sum`` combine whatever kinds they receive.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Tuple, Union

import sympy

from ..algebra import LieAlgebraSpec, UEAElement, eta, kron
from ..hopf import HopfStructure, TensorElement, perp, wedge
from ..series import GaussianRational, LaurentSeries, Parameter, format_gaussian, gaussian

Index = Union[int, str]
Value = Union[LaurentSeries, UEAElement, TensorElement]


@dataclass(frozen=True)
class EvalContext:
    algebra: LieAlgebraSpec
    order: int
    indices: Mapping[str, int] = field(default_factory=dict)

    def resolve(self, ref: Index) -> int:
        if isinstance(ref, int):
            return ref
        try:
            return int(self.indices[ref])
        except KeyError:
            raise KeyError(f"index '{ref}' is not bound in this context")

    def bind(self, **extra: int) -> "EvalContext":
        return EvalContext(self.algebra, self.order, {**self.indices, **extra})


def _ref_text(ref: Index) -> str:
    return str(ref)


class Node:
    def evaluate(self, ctx: EvalContext) -> Value:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


# scalars

@dataclass(frozen=True)
class Const(Node):
    re: Union[int, str] = 0
    im: Union[int, str] = 0

    def evaluate(self, ctx: EvalContext) -> LaurentSeries:
        return LaurentSeries.constant(gaussian(self.re, self.im), ctx.order)

    def render(self) -> str:
        return format_gaussian(gaussian(self.re, self.im))


I_UNIT = Const(0, 1)


@dataclass(frozen=True)
class Par(Node):
    """coeff * parameter"""

    param: Parameter
    coeff: Union[int, str] = 1

    def evaluate(self, ctx: EvalContext) -> LaurentSeries:
        return LaurentSeries.parameter(self.param, gaussian(self.coeff), ctx.order)

    def render(self) -> str:
        symbol = self.param.value
        return symbol if str(self.coeff) == "1" else f"{self.coeff}*{symbol}"


@dataclass(frozen=True)
class Eta(Node):
    a: Index
    b: Index

    def evaluate(self, ctx: EvalContext) -> LaurentSeries:
        return LaurentSeries.constant(eta(ctx.resolve(self.a), ctx.resolve(self.b)), ctx.order)

    def render(self) -> str:
        return f"eta[{_ref_text(self.a)},{_ref_text(self.b)}]"


@dataclass(frozen=True)
class Kron(Node):
    a: Index
    b: Index

    def evaluate(self, ctx: EvalContext) -> LaurentSeries:
        return LaurentSeries.constant(kron(ctx.resolve(self.a), ctx.resolve(self.b)), ctx.order)

    def render(self) -> str:
        return f"delta[{_ref_text(self.a)},{_ref_text(self.b)}]"


@dataclass(frozen=True)
class PsiChi(Node):
    """psi_lam / chi_lam over the free pair (mu, nu).

    ``delta`` variant: psi = d(nu,lam) d(0,mu) - d(mu,lam) d(0,nu) and
    chi = d(nu,lam) d(i,mu) - d(mu,lam) d(i,nu).
    ``eta`` variant: psi = e(nu,lam) e(l,mu) - e(mu,lam) e(l,nu) and
    chi = e(nu,lam) e(k,mu) - e(mu,lam) e(k,nu).
    """

    which: str
    variant: str
    lam: Index
    mu: Index = "mu"
    nu: Index = "nu"

    def value(self, ctx: EvalContext) -> int:
        lam, mu, nu = ctx.resolve(self.lam), ctx.resolve(self.mu), ctx.resolve(self.nu)
        if self.variant == "delta":
            companion = 0 if self.which == "psi" else ctx.resolve("i")
            return kron(nu, lam) * kron(companion, mu) - kron(mu, lam) * kron(companion, nu)
        companion = ctx.resolve("l") if self.which == "psi" else ctx.resolve("k")
        return eta(nu, lam) * eta(companion, mu) - eta(mu, lam) * eta(companion, nu)

    def evaluate(self, ctx: EvalContext) -> LaurentSeries:
        return LaurentSeries.constant(self.value(ctx), ctx.order)

    def render(self) -> str:
        return f"{self.which}[{_ref_text(self.lam)}]"


# algebra elements

@dataclass(frozen=True)
class Gen(Node):
    kind: str
    indices: Tuple[Index, ...]

    def __init__(self, kind: str, *indices: Index):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "indices", tuple(indices))

    def evaluate(self, ctx: EvalContext) -> UEAElement:
        values = [ctx.resolve(i) for i in self.indices]
        return UEAElement.generator(ctx.algebra, self.kind, *values, order=ctx.order)

    def render(self) -> str:
        return f"{self.kind}_{''.join(_ref_text(i) for i in self.indices)}"


@dataclass(frozen=True)
class Comm(Node):
    a: Node
    b: Node

    def evaluate(self, ctx: EvalContext) -> Value:
        return self.a.evaluate(ctx).commutator(self.b.evaluate(ctx))

    def render(self) -> str:
        return f"[{self.a.render()}, {self.b.render()}]"


SERIES_KINDS = ("sinh", "cosh_minus_1", "sin", "cos_minus_1")


@lru_cache(maxsize=None)
def taylor_coefficients(kind: str, order: int) -> Tuple[GaussianRational, ...]:
    """Coefficients of x^0 .. x^order of the named function."""
    x = sympy.Symbol("x")
    functions = {
        "sinh": sympy.sinh(x),
        "cosh_minus_1": sympy.cosh(x) - 1,
        "sin": sympy.sin(x),
        "cos_minus_1": sympy.cos(x) - 1,
    }
    if kind not in functions:
        raise ValueError(f"unknown series function '{kind}' (known: {', '.join(SERIES_KINDS)})")
    poly = sympy.series(functions[kind], x, 0, order + 1).removeO()
    out = []
    for n in range(order + 1):
        c = sympy.Rational(poly.coeff(x, n))
        out.append(gaussian(Fraction(int(c.p), int(c.q))))
    return tuple(out)


@dataclass(frozen=True)
class Series(Node):
    """f(coeff * arg) for f in sinh, cosh - 1, sin, cos - 1, truncated at the context order."""

    kind: str
    coeff: Node
    arg: Node

    def evaluate(self, ctx: EvalContext) -> UEAElement:
        x = self.arg.evaluate(ctx).scale(self.coeff.evaluate(ctx))
        coefficients = taylor_coefficients(self.kind, ctx.order)
        result = UEAElement.zero(ctx.algebra, ctx.order)
        power = UEAElement.unit(ctx.algebra, ctx.order)
        for n in range(1, ctx.order + 1):
            power = power * x
            if power.is_zero():
                break
            if coefficients[n]:
                result = result + power.scale(coefficients[n])
        return result

    def render(self) -> str:
        name = {"sinh": "sinh", "cosh_minus_1": "cosh", "sin": "sin", "cos_minus_1": "cos"}[self.kind]
        body = f"{name}({self.coeff.render()}*{self.arg.render()})"
        return f"({body}-1)" if self.kind.endswith("minus_1") else body


# combinators

def _multiply(left: Value, right: Value) -> Value:
    if isinstance(left, LaurentSeries) and isinstance(right, LaurentSeries):
        return left * right
    if isinstance(left, LaurentSeries):
        return right.scale(left)
    if isinstance(right, LaurentSeries):
        return left.scale(right)
    return left * right


@dataclass(frozen=True)
class Prod(Node):
    factors: Tuple[Node, ...]

    def __init__(self, *factors: Node):
        object.__setattr__(self, "factors", tuple(factors))

    def evaluate(self, ctx: EvalContext) -> Value:
        value = self.factors[0].evaluate(ctx)
        for factor in self.factors[1:]:
            value = _multiply(value, factor.evaluate(ctx))
        return value

    def render(self) -> str:
        return "*".join(_wrap(f) for f in self.factors)


@dataclass(frozen=True)
class Sum(Node):
    terms: Tuple[Node, ...]

    def __init__(self, *terms: Node):
        object.__setattr__(self, "terms", tuple(terms))

    def evaluate(self, ctx: EvalContext) -> Value:
        value = self.terms[0].evaluate(ctx)
        for term in self.terms[1:]:
            other = term.evaluate(ctx)
            if isinstance(value, UEAElement) and isinstance(other, LaurentSeries):
                other = UEAElement.scalar(value.algebra, other)
            value = value + other
        return value

    def render(self) -> str:
        return " + ".join(t.render() for t in self.terms).replace("+ -", "- ")


@dataclass(frozen=True)
class Neg(Node):
    inner: Node

    def evaluate(self, ctx: EvalContext) -> Value:
        return -self.inner.evaluate(ctx)

    def render(self) -> str:
        return f"-{_wrap(self.inner)}"


def _wrap(node: Node) -> str:
    text = node.render()
    return f"({text})" if isinstance(node, (Sum, Neg)) else text


@dataclass(frozen=True)
class Wedge(Node):
    a: Node
    b: Node

    def evaluate(self, ctx: EvalContext) -> TensorElement:
        return wedge(self.a.evaluate(ctx), self.b.evaluate(ctx))

    def render(self) -> str:
        return f"({self.a.render()}) ^ ({self.b.render()})"


@dataclass(frozen=True)
class Perp(Node):
    a: Node
    b: Node

    def evaluate(self, ctx: EvalContext) -> TensorElement:
        return perp(self.a.evaluate(ctx), self.b.evaluate(ctx))

    def render(self) -> str:
        return f"({self.a.render()}) _|_ ({self.b.render()})"


@dataclass(frozen=True)
class Otimes(Node):
    a: Node
    b: Node

    def evaluate(self, ctx: EvalContext) -> TensorElement:
        return TensorElement.otimes(self.a.evaluate(ctx), self.b.evaluate(ctx))

    def render(self) -> str:
        return f"({self.a.render()}) (x) ({self.b.render()})"


@lru_cache(maxsize=None)
def _primitive(algebra: LieAlgebraSpec, order: int) -> HopfStructure:
    return HopfStructure.primitive(algebra, order)


@dataclass(frozen=True)
class Delta0(Node):
    inner: Node

    def evaluate(self, ctx: EvalContext) -> TensorElement:
        return _primitive(ctx.algebra, ctx.order).apply_coproduct(self.inner.evaluate(ctx))

    def render(self) -> str:
        return f"D0({self.inner.render()})"
