"""Hopf structures, twist factors, twisted coproducts and their consistency checks."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ..algebra import GeneratorId, LieAlgebraSpec, UEAElement, Word, build_poincare
from ..deformations import get_spec, validate_indices
from ..series import DEFAULT_ORDER, IMAG, LaurentSeries, Parameter, gaussian
from .tensor import TensorElement, exponential, wedge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one identity check: residual text is empty when the identity holds."""

    passed: bool
    residual: str
    exact: bool
    order: int
    detail: str = ""

    @property
    def exactness(self) -> str:
        return "exact" if self.exact else f"order-{self.order}"


def _outcome(residual, exact: bool, order: int, detail: str = "", expect_zero: bool = True) -> CheckOutcome:
    zero = residual.is_zero()
    return CheckOutcome(
        passed=zero if expect_zero else not zero,
        residual="" if zero else residual.to_text(),
        exact=exact and zero,
        order=order,
        detail=detail,
    )


@dataclass(frozen=True, eq=False)
class HopfStructure:
    """Coproduct, counit and antipode on generators, extended to words multiplicatively."""

    algebra: LieAlgebraSpec
    order: int
    coproduct: Mapping[GeneratorId, TensorElement]
    antipode: Mapping[GeneratorId, UEAElement]
    counit: Mapping[GeneratorId, LaurentSeries]
    exact: Mapping[GeneratorId, bool] = field(default_factory=dict)
    name: str = "primitive"
    _word_cache: Dict[Word, TensorElement] = field(default_factory=dict, repr=False)

    @classmethod
    def primitive(cls, algebra: LieAlgebraSpec, order: int = DEFAULT_ORDER) -> "HopfStructure":
        return cls(
            algebra=algebra,
            order=order,
            coproduct={g: classical_coproduct(g, algebra, order) for g in algebra.generators},
            antipode={g: -UEAElement.of(algebra, g, order) for g in algebra.generators},
            counit={g: LaurentSeries.zero(order) for g in algebra.generators},
            exact={g: True for g in algebra.generators},
        )

    def coproduct_of_word(self, word: Word) -> TensorElement:
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        result = TensorElement.unit(self.algebra, 2, self.order)
        for letter in word:
            result = result * self.coproduct[self.algebra.generators[letter]]
        self._word_cache[word] = result
        return result

    def apply_coproduct(self, element: UEAElement) -> TensorElement:
        result = TensorElement.zero(self.algebra, 2, self.order)
        for word, c in element.terms.items():
            result = result + self.coproduct_of_word(word).scale(c)
        return result

    def expand_leg(self, tensor: TensorElement, leg: int) -> TensorElement:
        return tensor.expand_leg(leg, self.coproduct_of_word)

    def antipode_of(self, element: UEAElement) -> UEAElement:
        """Antihomomorphic extension of the generator antipodes."""
        result = UEAElement.zero(self.algebra, self.order)
        for word, c in element.terms.items():
            term = UEAElement.unit(self.algebra, self.order)
            for letter in reversed(word):
                term = term * self.antipode[self.algebra.generators[letter]]
            result = result + term.scale(c)
        return result


def classical_coproduct(g: GeneratorId, algebra: Optional[LieAlgebraSpec] = None,
                        order: int = DEFAULT_ORDER) -> TensorElement:
    """Primitive coproduct g (x) 1 + 1 (x) g."""
    algebra = algebra or build_poincare()
    x = UEAElement.of(algebra, g, order)
    one = UEAElement.unit(algebra, order)
    return TensorElement.otimes(x, one) + TensorElement.otimes(one, x)


@dataclass(frozen=True, eq=False)
class TwistFactor:
    """F = exp(exponent) with a rank-2 exponent."""

    name: str
    indices: Mapping[str, int]
    exponent: TensorElement
    carrier: Tuple[GeneratorId, ...]
    carrier_abelian: bool

    @property
    def algebra(self) -> LieAlgebraSpec:
        return self.exponent.algebra

    @property
    def order(self) -> int:
        return self.exponent.order

    @property
    def skew(self) -> bool:
        return self.exponent.swap() == -self.exponent

    def expand(self) -> Tuple[TensorElement, bool]:
        return exponential(self.exponent, TensorElement.unit(self.algebra, 2, self.order))


def _carrier(exponent: TensorElement) -> Tuple[GeneratorId, ...]:
    positions = sorted({letter for key in exponent.terms for word in key for letter in word})
    return tuple(exponent.algebra.generators[p] for p in positions)


def _is_abelian(algebra: LieAlgebraSpec, generators: Iterable[GeneratorId]) -> bool:
    gens = list(generators)
    return all(not algebra.bracket(a, b) for a in gens for b in gens)


def twist_from_exponent(name: str, exponent: TensorElement, indices: Optional[Mapping[str, int]] = None) -> TwistFactor:
    carrier = _carrier(exponent)
    return TwistFactor(name=name, indices=dict(indices or {}), exponent=exponent, carrier=carrier,
                       carrier_abelian=_is_abelian(exponent.algebra, carrier))


def build_twist(name, indices: Mapping[str, int], order: int = DEFAULT_ORDER) -> TwistFactor:
    """Twist factor of a catalog deformation: exponent i * sum c X ^ Y."""
    spec = get_spec(name)
    indices = validate_indices(spec.id, indices)
    algebra = build_poincare()
    exponent = TensorElement.zero(algebra, 2, order)
    for coeff, (xk, xi), (yk, yi) in spec.terms(indices, order):
        x = UEAElement.generator(algebra, xk, *xi, order=order)
        y = UEAElement.generator(algebra, yk, *yi, order=order)
        exponent = exponent + wedge(x, y).scale(coeff.scale(IMAG))
    twist = twist_from_exponent(spec.id.value, exponent, indices)
    logger.debug(f"built twist {twist.name} {dict(indices)}: {exponent.to_text()}")
    return twist


def trivial_twist(algebra: Optional[LieAlgebraSpec] = None, order: int = DEFAULT_ORDER) -> TwistFactor:
    algebra = algebra or build_poincare()
    return twist_from_exponent("trivial", TensorElement.zero(algebra, 2, order))


def control_twist(order: int = DEFAULT_ORDER) -> TwistFactor:
    """exp(xi P1 (x) M12): not a twist, its cocycle residual starts at xi^2."""
    algebra = build_poincare()
    exponent = TensorElement.otimes(
        UEAElement.generator(algebra, "P", 1, order=order),
        UEAElement.generator(algebra, "M", 1, 2, order=order),
    ).scale(LaurentSeries.parameter(Parameter.XI_KL, 1, order))
    return twist_from_exponent("control:P1(x)M12", exponent)


def twist_inverse(F: TwistFactor) -> TensorElement:
    """exp(-exponent), checked against F * F^-1 = 1 (x) 1 to the truncation order."""
    one = TensorElement.unit(F.algebra, 2, F.order)
    forward, _ = F.expand()
    inverse, _ = exponential(-F.exponent, one)
    if not (forward * inverse - one).is_zero():
        raise ArithmeticError(f"twist {F.name}: F * exp(-X) differs from 1 (x) 1")
    return inverse


@dataclass(frozen=True)
class TwistedCoproduct:
    value: TensorElement
    exact: bool


def twist_coproduct(F: TwistFactor, base: HopfStructure, g: GeneratorId, order: Optional[int] = None) -> TwistedCoproduct:
    """F * base(g) * F^-1 summed as exp(ad X) applied to base(g)."""
    order = order if order is not None else F.order
    result = base.coproduct[g]
    term = result
    for n in range(1, order + 2):
        term = F.exponent.commutator(term).scale(gaussian(Fraction(1, n)))
        if term.is_zero():
            return TwistedCoproduct(result, base.exact.get(g, False) and not term.truncated)
        result = result + term
    return TwistedCoproduct(result, False)


def sweedler_u(F: TwistFactor) -> Tuple[UEAElement, bool]:
    """u = m o (1 (x) S0)(F).

    The exact flag is raised only when u reduced to 1 and the exponent is
    skew with a commuting carrier; then every order cancels in closed form.
    """
    expanded, _ = F.expand()
    u = expanded.multiply_legs(right=lambda b: b.antipode0())
    unit = UEAElement.unit(F.algebra, F.order)
    return u, (u - unit).is_zero() and F.carrier_abelian and F.skew


def _inverse_unipotent(u: UEAElement) -> UEAElement:
    """Neumann series for u^-1 with u - 1 of positive parameter degree."""
    one = UEAElement.unit(u.algebra, u.order)
    nil = one - u
    result = one
    power = one
    for _ in range(u.order):
        power = power * nil
        if power.is_zero():
            break
        result = result + power
    return result


def twisted_hopf(F: TwistFactor, base: Optional[HopfStructure] = None) -> HopfStructure:
    """Full twisted Hopf structure: coproducts F D F^-1, antipodes u S0 u^-1, unchanged counit."""
    base = base or HopfStructure.primitive(F.algebra, F.order)
    coproduct, exact = {}, {}
    for g in F.algebra.generators:
        twisted = twist_coproduct(F, base, g)
        coproduct[g] = twisted.value
        exact[g] = twisted.exact
    u, _ = sweedler_u(F)
    u_inv = _inverse_unipotent(u)
    antipode = {g: u * base.antipode[g] * u_inv for g in F.algebra.generators}
    logger.debug(f"twisted Hopf structure for {F.name}: {sum(exact.values())}/{len(exact)} exact coproducts")
    return HopfStructure(algebra=F.algebra, order=F.order, coproduct=coproduct, antipode=antipode,
                         counit=dict(base.counit), exact=exact, name=F.name)


def check_cocycle(F: TwistFactor, base: Optional[HopfStructure] = None) -> CheckOutcome:
    """F_12 (D (x) 1)F - F_23 (1 (x) D)F as a rank-3 residual."""
    base = base or HopfStructure.primitive(F.algebra, F.order)
    algebra, order = F.algebra, F.order
    one3 = TensorElement.unit(algebra, 3, order)
    x12 = F.exponent.embed((0, 1), 3)
    x23 = F.exponent.embed((1, 2), 3)
    left_leg = base.expand_leg(F.exponent, 0)
    right_leg = base.expand_leg(F.exponent, 1)

    lhs = exponential(x12, one3)[0] * exponential(left_leg, one3)[0]
    rhs = exponential(x23, one3)[0] * exponential(right_leg, one3)[0]
    residual = lhs - rhs

    # exponents that commute and add up to the same element give an all-orders identity
    closed_form = (
        x12.commutator(left_leg).is_zero()
        and x23.commutator(right_leg).is_zero()
        and (x12 + left_leg - x23 - right_leg).is_zero()
        and not (left_leg.truncated or right_leg.truncated)
    )
    return _outcome(residual, closed_form, order, detail=f"twist {F.name} over {base.name} coproduct")


def check_second_leg_cocycle(first, second, indices: Mapping[str, int], order: int = DEFAULT_ORDER) -> CheckOutcome:
    """Cocycle of the unmodified ``second`` twist over the coproduct twisted by ``first``."""
    second_twist = build_twist(second, indices, order)
    if first is None or first == "trivial":
        base = HopfStructure.primitive(second_twist.algebra, order)
    else:
        base = twisted_hopf(build_twist(first, indices, order))
    return check_cocycle(second_twist, base)


def check_normalization(F: TwistFactor) -> CheckOutcome:
    """(e (x) 1)F and (1 (x) e)F against 1."""
    expanded, _ = F.expand()
    unit = UEAElement.unit(F.algebra, F.order)
    left = expanded.counit_on_leg(0) - unit
    right = expanded.counit_on_leg(1) - unit
    # e is a homomorphism, so a vanishing image of the exponent makes the identity exact
    exact = F.exponent.counit_on_leg(0).is_zero() and F.exponent.counit_on_leg(1).is_zero()
    if not left.is_zero():
        return _outcome(left, exact, F.order, detail="(e (x) 1)F")
    return _outcome(right, exact, F.order, detail="(1 (x) e)F")


def check_sweedler_u(F: TwistFactor) -> CheckOutcome:
    u, exact = sweedler_u(F)
    return _outcome(u - UEAElement.unit(F.algebra, F.order), exact, F.order, detail="u - 1")


# Hopf axioms on a (twisted) structure

def check_counit(hopf: HopfStructure, g: GeneratorId) -> CheckOutcome:
    delta = hopf.coproduct[g]
    x = UEAElement.of(hopf.algebra, g, hopf.order)
    left = delta.counit_on_leg(0) - x
    right = delta.counit_on_leg(1) - x
    residual = left if not left.is_zero() else right
    return _outcome(residual, hopf.exact.get(g, False), hopf.order, detail=f"counit {g}")


def check_coassociativity(hopf: HopfStructure, g: GeneratorId) -> CheckOutcome:
    delta = hopf.coproduct[g]
    residual = hopf.expand_leg(delta, 0) - hopf.expand_leg(delta, 1)
    return _outcome(residual, False, hopf.order, detail=f"coassociativity {g}")


def check_homomorphism(hopf: HopfStructure, a: GeneratorId, b: GeneratorId) -> CheckOutcome:
    algebra = hopf.algebra
    bracket = UEAElement.zero(algebra, hopf.order)
    for g, c in algebra.bracket(a, b).items():
        bracket = bracket + UEAElement.of(algebra, g, hopf.order).scale(c)
    lhs = hopf.apply_coproduct(bracket)
    rhs = hopf.coproduct[a].commutator(hopf.coproduct[b])
    return _outcome(lhs - rhs, False, hopf.order, detail=f"D([{a},{b}]) = [D({a}), D({b})]")


def check_antipode_axiom(hopf: HopfStructure, g: GeneratorId) -> CheckOutcome:
    """m o (S (x) 1) D(g) = e(g) 1, which is zero on generators."""
    residual = hopf.coproduct[g].multiply_legs(left=hopf.antipode_of)
    return _outcome(residual, False, hopf.order, detail=f"antipode axiom {g}")


def undeformed_antipode_residual(hopf: HopfStructure, g: GeneratorId) -> UEAElement:
    return hopf.antipode[g] + UEAElement.of(hopf.algebra, g, hopf.order)
