"""Hopf-module action on coordinate polynomials, twisted star products and space-time tables."""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import sympy

from ..algebra import GeneratorId, UEAElement, Word, build_poincare
from ..deformations import get_spec, validate_indices
from ..hopf import CheckOutcome, TwistFactor, build_twist
from ..series import LaurentSeries, Parameter, gaussian
from .functions import Monomial, PolyFunction

logger = logging.getLogger(__name__)

DEFAULT_SAFETY_ORDER = 8

Pair = Tuple[Monomial, Monomial]
BiPolynomial = Dict[Pair, LaurentSeries]
CommutatorTable = Dict[Tuple[int, int], PolyFunction]


# Domain exceptions for deterministic error handling

class StarProductTerminationError(Exception):
    pass


def act_generator(g: GeneratorId, f: PolyFunction) -> PolyFunction:
    """P_mu |> f = i d_mu f and M_mu_nu |> f = i (x_mu d_nu - x_nu d_mu) f."""
    i = gaussian(0, 1)
    if g.kind == "P":
        (mu,) = g.indices
        return f.derivative(mu).scale(i)
    if g.kind == "M":
        mu, nu = g.indices
        x_mu = PolyFunction.coordinate(mu, f.order)
        x_nu = PolyFunction.coordinate(nu, f.order)
        return (x_mu * f.derivative(nu) - x_nu * f.derivative(mu)).scale(i)
    raise ValueError(f"no differential representation for generator {g}")


def act_word(algebra, word: Word, f: PolyFunction) -> PolyFunction:
    for letter in reversed(word):
        if f.is_zero():
            break
        f = act_generator(algebra.generators[letter], f)
    return f


def act(g: UEAElement, f: PolyFunction) -> PolyFunction:
    """Left action extended over PBW words."""
    result = PolyFunction.zero(f.order)
    for word, c in g.terms.items():
        result = result + act_word(g.algebra, word, f).scale(c)
    return result


def _retag(f: PolyFunction, order: int) -> PolyFunction:
    return PolyFunction({m: c.with_order(order) for m, c in f.terms.items()}, order)


def _accumulate(out: BiPolynomial, key: Pair, value: LaurentSeries):
    total = out[key] + value if key in out else value
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def _apply_exponent(F: TwistFactor, state: BiPolynomial) -> BiPolynomial:
    """X |> (f (x) g) legwise, on a sum of monomial pairs."""
    algebra, order = F.algebra, F.order
    out: BiPolynomial = {}
    for (m1, m2), c in state.items():
        left_f = PolyFunction.monomial(m1, LaurentSeries.one(order), order)
        right_f = PolyFunction.monomial(m2, LaurentSeries.one(order), order)
        for (w1, w2), cx in F.exponent.terms.items():
            left = act_word(algebra, w1, left_f)
            if left.is_zero():
                continue
            right = act_word(algebra, w2, right_f)
            scale = c * cx
            for n1, a in left.terms.items():
                for n2, b in right.terms.items():
                    _accumulate(out, (n1, n2), scale * a * b)
    return out


def star_product(f: PolyFunction, g: PolyFunction, F: TwistFactor,
                 safety_order: int = DEFAULT_SAFETY_ORDER) -> PolyFunction:
    """f * g = m o (F^-1 |> f (x) g) with F^-1 = exp(-X).

    Every term of exp(-X) lowers the polynomial degree through a momentum leg,
    so the sum stops by itself; running past ``safety_order`` is an error.
    """
    order = F.order
    f, g = _retag(f, order), _retag(g, order)
    term: BiPolynomial = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            _accumulate(term, (m1, m2), c1 * c2)
    total = dict(term)
    for n in range(1, safety_order + 1):
        term = _apply_exponent(F, term)
        if not term:
            break
        step = gaussian(Fraction(-1, n))
        term = {key: c.scale(step) for key, c in term.items()}
        for key, c in term.items():
            _accumulate(total, key, c)
    else:
        if _apply_exponent(F, term):
            raise StarProductTerminationError(
                f"star product for twist {F.name} did not terminate within {safety_order} orders"
            )
    if any(c.truncated for c in total.values()):
        raise StarProductTerminationError(
            f"star product for twist {F.name} exceeded the parameter order {order}; raise the safety order"
        )
    out: Dict[Monomial, LaurentSeries] = {}
    for (m1, m2), c in total.items():
        m = tuple(a + b for a, b in zip(m1, m2))
        out[m] = out[m] + c if m in out else c
    return PolyFunction(out, order)


def star_bracket(f: PolyFunction, g: PolyFunction, F: TwistFactor,
                 safety_order: int = DEFAULT_SAFETY_ORDER) -> PolyFunction:
    return star_product(f, g, F, safety_order) - star_product(g, f, F, safety_order)


def star_commutator(mu: int, nu: int, F: TwistFactor, safety_order: int = DEFAULT_SAFETY_ORDER) -> PolyFunction:
    """[x_mu, x_nu]_* = x_mu * x_nu - x_nu * x_mu"""
    x_mu = PolyFunction.coordinate(mu, F.order)
    x_nu = PolyFunction.coordinate(nu, F.order)
    return star_bracket(x_mu, x_nu, F, safety_order)


def commutator_table(F: TwistFactor, safety_order: int = DEFAULT_SAFETY_ORDER) -> CommutatorTable:
    return {(mu, nu): star_commutator(mu, nu, F, safety_order) for mu in range(4) for nu in range(4)}


@dataclass(frozen=True)
class SpacetimeDerivation:
    """Derived commutators next to the printed ones; ``mismatches`` is empty on agreement."""

    deformation: str
    indices: Mapping[str, int]
    derived: CommutatorTable
    expected: CommutatorTable
    mismatches: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def matched(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "deformation": self.deformation,
            "indices": dict(self.indices),
            "matched": self.matched,
            "commutators": table_as_dict(self.derived),
            "mismatches": list(self.mismatches),
            "latex": table_latex(self.derived),
        }


def table_mismatches(derived: CommutatorTable, expected: CommutatorTable) -> Tuple[str, ...]:
    out = []
    for key in sorted(derived):
        if derived[key] != expected[key]:
            mu, nu = key
            out.append(f"[x{mu},x{nu}]: derived {derived[key].to_text()}, printed {expected[key].to_text()}")
    return tuple(out)


def derive_spacetime(deformation, indices: Mapping[str, int],
                     safety_order: int = DEFAULT_SAFETY_ORDER) -> SpacetimeDerivation:
    """All sixteen star commutators of a deformation, compared with the printed table."""
    # the catalog imports PolyFunction from this package
    from ..catalog import catalog_spacetime

    spec = get_spec(deformation)
    indices = validate_indices(spec.id, indices)
    F = build_twist(spec.id, indices, safety_order)
    derived = commutator_table(F, safety_order)
    expected = catalog_spacetime(spec.id, indices, safety_order)
    mismatches = table_mismatches(derived, expected)
    logger.debug(f"space-time {spec.id.value} {indices}: {len(mismatches)} mismatching commutators")
    return SpacetimeDerivation(spec.id.value, indices, derived, expected, mismatches)


def spacetime_reduction(deformation, vanishing: Parameter, indices: Mapping[str, int],
                        safety_order: int = DEFAULT_SAFETY_ORDER) -> CheckOutcome:
    """Derived superposed table at one vanishing parameter against the derived single table."""
    spec = get_spec(deformation)
    if not spec.generalized or vanishing not in spec.parameters:
        raise ValueError(f"{vanishing.value} does not reduce {spec.id.value}")
    survivor = spec.components[1] if vanishing == spec.parameters[0] else spec.components[0]
    indices = validate_indices(spec.id, indices)
    full = commutator_table(build_twist(spec.id, indices, safety_order), safety_order)
    reduced = {key: value.substitute_zero(vanishing) for key, value in full.items()}
    single = commutator_table(build_twist(survivor, validate_indices(survivor, indices), safety_order),
                              safety_order)
    mismatches = table_mismatches(reduced, single)
    return CheckOutcome(
        passed=not mismatches,
        residual="; ".join(mismatches),
        exact=True,
        order=safety_order,
        detail=f"{spec.id.value} at {vanishing.value}=0 vs {survivor.value}",
    )


# consistency checks on the derived space-time

def _coordinates(order: int) -> List[PolyFunction]:
    return [PolyFunction.coordinate(mu, order) for mu in range(4)]


def check_star_jacobi(F: TwistFactor, safety_order: int = DEFAULT_SAFETY_ORDER) -> CheckOutcome:
    """[[x_a, x_b]_*, x_c]_* + cyclic for every coordinate triple."""
    xs = _coordinates(F.order)
    table = commutator_table(F, safety_order)
    for a, b, c in itertools.combinations(range(4), 3):
        total = PolyFunction.zero(F.order)
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            total = total + star_bracket(table[(p, q)], xs[r], F, safety_order)
        if not total.is_zero():
            return CheckOutcome(False, total.to_text(), False, safety_order, detail=f"Jacobi x{a},x{b},x{c}")
    return CheckOutcome(True, "", True, safety_order, detail="Jacobi over all coordinate triples")


def check_star_antisymmetry(F: TwistFactor, safety_order: int = DEFAULT_SAFETY_ORDER) -> CheckOutcome:
    xs = _coordinates(F.order)
    for mu, nu in itertools.product(range(4), repeat=2):
        residual = star_bracket(xs[mu], xs[nu], F, safety_order) + star_bracket(xs[nu], xs[mu], F, safety_order)
        if not residual.is_zero():
            return CheckOutcome(False, residual.to_text(), False, safety_order, detail=f"x{mu},x{nu}")
    return CheckOutcome(True, "", True, safety_order, detail="[x_mu,x_nu]_* = -[x_nu,x_mu]_*")


def check_star_associativity(F: TwistFactor, safety_order: int = DEFAULT_SAFETY_ORDER) -> CheckOutcome:
    """(f * g) * h = f * (g * h) on every triple of coordinates."""
    xs = _coordinates(F.order)
    for a, b, c in itertools.product(range(4), repeat=3):
        left = star_product(star_product(xs[a], xs[b], F, safety_order), xs[c], F, safety_order)
        right = star_product(xs[a], star_product(xs[b], xs[c], F, safety_order), F, safety_order)
        if left != right:
            return CheckOutcome(False, (left - right).to_text(), False, safety_order,
                                detail=f"(x{a} * x{b}) * x{c}")
    return CheckOutcome(True, "", True, safety_order, detail="associativity on coordinate triples")


def check_classical_limit(F: TwistFactor, safety_order: int = DEFAULT_SAFETY_ORDER) -> CheckOutcome:
    """The parameter-free part of x_mu * x_nu is the pointwise product."""
    xs = _coordinates(F.order)
    for mu, nu in itertools.product(range(4), repeat=2):
        product = star_product(xs[mu], xs[nu], F, safety_order)
        residual = product.classical_part() - xs[mu] * xs[nu]
        if not residual.is_zero():
            return CheckOutcome(False, residual.to_text(), False, safety_order, detail=f"x{mu} * x{nu}")
    return CheckOutcome(True, "", True, safety_order, detail="star product deforms only the product")


def monomials(max_degree: int) -> List[Monomial]:
    return sorted(m for m in itertools.product(range(max_degree + 1), repeat=4) if sum(m) <= max_degree)


def representation_violations(max_degree: int = 3, generators: Optional[Iterable[GeneratorId]] = None
                              ) -> List[Tuple[GeneratorId, GeneratorId, Monomial]]:
    """(a, b, m) where [a, b] |> x^m differs from a |> b |> x^m - b |> a |> x^m."""
    algebra = build_poincare()
    gens = list(generators or algebra.generators)
    bad = []
    for m in monomials(max_degree):
        f = PolyFunction.monomial(m)
        for a, b in itertools.product(gens, repeat=2):
            bracket = PolyFunction.zero(f.order)
            for g, c in algebra.bracket(a, b).items():
                bracket = bracket + act_generator(g, f).scale(c)
            direct = act_generator(a, act_generator(b, f)) - act_generator(b, act_generator(a, f))
            if bracket != direct:
                bad.append((a, b, m))
    return bad


# rendering

def table_as_dict(table: CommutatorTable) -> Dict[str, str]:
    return {f"[x{mu},x{nu}]": table[(mu, nu)].to_text() for (mu, nu) in sorted(table) if mu < nu}


def table_latex(table: CommutatorTable) -> List[str]:
    """Display-math lines for the independent commutators."""
    return [
        rf"[x_{{{mu}}}, x_{{{nu}}}]_\star = {sympy.latex(table[(mu, nu)].to_sympy())}"
        for (mu, nu) in sorted(table) if mu < nu
    ]

