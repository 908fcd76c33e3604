"""Nonrelativistic contraction of the twisted Poincare Hopf algebras.

Poincare generators are rewritten in Galilei generators with explicit powers
of c, deformation parameters are traded for their rescaled Galilei
counterparts, and every coefficient is sent to c -> infinity. PBW words are
renamed letter by letter into an auxiliary copy of the Galilei algebra that
keeps the Poincare ordering, so no reordering happens before the limit; the
limit is rebased onto the standard Galilei PBW order afterwards.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple, Union

from ..algebra import (
    GeneratorId,
    LieAlgebraSpec,
    UEAElement,
    build_galilei,
    build_poincare,
    jacobi_violations,
)
from ..algebra.algebra import _accumulate, _spec_from_brackets
from ..catalog import CatalogDiff, catalog_coproduct, compare_to_catalog
from ..deformations import canonical_indices, get_spec, validate_indices
from ..hopf import CheckOutcome, HopfStructure, TensorElement, build_twist, classical_coproduct, twisted_hopf
from ..series import DEFAULT_ORDER, ONE, DivergenceError, LaurentSeries, Parameter, as_gaussian

logger = logging.getLogger(__name__)

Element = Union[UEAElement, TensorElement]


@dataclass(frozen=True)
class GeneratorImage:
    """g = sign * c**c_power * target"""

    target: GeneratorId
    sign: int
    c_power: int


@dataclass(frozen=True, eq=False)
class ContractionMap:
    name: str
    generators: Mapping[GeneratorId, GeneratorImage]
    # p -> (target, k) means p = target * c**k
    parameters: Mapping[Parameter, Tuple[Parameter, int]]

    def image(self, g: GeneratorId) -> GeneratorImage:
        return self.generators[g]

    def galilei_parameter(self, param: Parameter) -> Parameter:
        return self.parameters[param][0]


def _standard_generators() -> Dict[GeneratorId, GeneratorImage]:
    out = {GeneratorId("P", (0,)): GeneratorImage(GeneratorId("Pi", (0,)), 1, -1)}
    for a in (1, 2, 3):
        out[GeneratorId("P", (a,))] = GeneratorImage(GeneratorId("Pi", (a,)), 1, 0)
        # M_a0 = c V_a
        out[GeneratorId("M", (0, a))] = GeneratorImage(GeneratorId("V", (a,)), -1, 1)
        for b in range(a + 1, 4):
            out[GeneratorId("M", (a, b))] = GeneratorImage(GeneratorId("K", (a, b)), 1, 0)
    return out


_SCALED_PARAMETERS = {
    Parameter.INV_KAPPA: (Parameter.INV_LAMBDA, -1),
    Parameter.INV_KAPPA_HAT: (Parameter.INV_LAMBDA_HAT, 1),
    Parameter.INV_KAPPA_BAR: (Parameter.INV_LAMBDA_BAR, 0),
    Parameter.THETA_KL: (Parameter.XI_KL, 0),
    Parameter.THETA_0I: (Parameter.XI_0I, 1),
}

STANDARD_CONTRACTION = ContractionMap("standard", _standard_generators(), _SCALED_PARAMETERS)
# lambda = kappa without the compensating power of c
UNSCALED_CONTRACTION = ContractionMap(
    "unscaled", _standard_generators(), {**_SCALED_PARAMETERS, Parameter.INV_KAPPA: (Parameter.INV_LAMBDA, 0)}
)


@lru_cache(maxsize=None)
def image_algebra(m: ContractionMap) -> LieAlgebraSpec:
    """Galilei brackets with the generators in the order of their Poincare preimages."""
    poincare = build_poincare()
    return build_galilei().reordered(f"galilei[{m.name}]", [m.image(g).target for g in poincare.generators])


def _word_factor(m: ContractionMap, word) -> Tuple[int, int]:
    generators = build_poincare().generators
    sign, power = 1, 0
    for letter in word:
        image = m.image(generators[letter])
        sign *= image.sign
        power += image.c_power
    return sign, power


def _image_coefficient(m: ContractionMap, c: LaurentSeries, sign: int, power: int) -> LaurentSeries:
    return c.substitute_parameters(m.parameters).times_c_power(power).scale(sign)


def substitute(element: Element, m: ContractionMap = STANDARD_CONTRACTION) -> Element:
    """Rewrite a Poincare expression in Galilei generators, keeping the c dependence explicit."""
    target = image_algebra(m)
    if isinstance(element, UEAElement):
        terms = {}
        for word, c in element.terms.items():
            terms[word] = _image_coefficient(m, c, *_word_factor(m, word))
        return UEAElement(target, terms, element.order, element.truncated)
    terms = {}
    for key, c in element.terms.items():
        sign, power = 1, 0
        for word in key:
            s, p = _word_factor(m, word)
            sign, power = sign * s, power + p
        terms[key] = _image_coefficient(m, c, sign, power)
    return TensorElement(target, element.rank, terms, element.order, element.truncated)


def take_limit(element: Element, generator: Optional[str] = None) -> Element:
    """c -> infinity on every coefficient."""
    try:
        return element.map_coefficients(lambda c: c.limit_c_to_infinity())
    except DivergenceError as exc:
        where = f" in the contraction of {generator}" if generator else ""
        raise DivergenceError(f"{exc}{where}", term=exc.term, generator=generator) from exc


def _galilei_word(source: LieAlgebraSpec, galilei: LieAlgebraSpec, word):
    return galilei.normal_form(tuple(galilei.position(source.generators[p]) for p in word))


def rebase(element: Element) -> Element:
    """Move an image-order element onto the standard Galilei PBW order."""
    galilei = build_galilei()
    source = element.algebra
    if isinstance(element, UEAElement):
        out: Dict = {}
        for word, c in element.terms.items():
            for w, s in _galilei_word(source, galilei, word):
                _accumulate(out, w, c.scale(s))
        return UEAElement(galilei, out, element.order, element.truncated)
    out = {}
    for key, c in element.terms.items():
        combos = [((), ONE)]
        for word in key:
            combos = [(k + (w,), s * t) for k, s in combos for w, t in _galilei_word(source, galilei, word)]
        for k, s in combos:
            _accumulate(out, k, c.scale(s))
    return TensorElement(galilei, element.rank, out, element.order, element.truncated)


def contract_element(element: Element, g: GeneratorId, m: ContractionMap = STANDARD_CONTRACTION) -> Element:
    """Image of a structure map evaluated on ``g``, divided by the scaling of ``g`` and sent to the limit."""
    image = m.image(g)
    rescaled = substitute(element, m).map_coefficients(
        lambda c: c.times_c_power(-image.c_power).scale(image.sign)
    )
    return rebase(take_limit(rescaled, str(image.target)))


@dataclass(frozen=True)
class ContractedAlgebra:
    algebra: LieAlgebraSpec
    mismatches: Tuple[str, ...]
    jacobi: Tuple[Tuple[GeneratorId, GeneratorId, GeneratorId], ...]

    @property
    def matched(self) -> bool:
        return not self.mismatches


def contract_algebra(m: ContractionMap = STANDARD_CONTRACTION) -> ContractedAlgebra:
    """Contract every Poincare bracket and compare the limit with the Galilei table."""
    poincare, galilei = build_poincare(), build_galilei()
    brackets = {}
    for a in poincare.generators:
        for b in poincare.generators:
            ia, ib = m.image(a), m.image(b)
            combo = {}
            for g, coeff in poincare.bracket(a, b).items():
                ig = m.image(g)
                power = ig.c_power - ia.c_power - ib.c_power
                if power > 0:
                    raise DivergenceError(
                        f"[{ia.target}, {ib.target}] grows like c^{power}", term=str(ig.target),
                        generator=f"[{ia.target},{ib.target}]",
                    )
                if power == 0:
                    combo[ig.target] = coeff * as_gaussian(ig.sign * ia.sign * ib.sign)
            brackets[(ia.target, ib.target)] = combo
    contracted = _spec_from_brackets("galilei-contracted", galilei.generators, brackets, galilei.metric)
    mismatches = []
    for a in galilei.generators:
        for b in galilei.generators:
            if contracted.bracket(a, b) != galilei.bracket(a, b):
                mismatches.append(f"[{a},{b}]")
    return ContractedAlgebra(contracted, tuple(mismatches), tuple(jacobi_violations(contracted)))


@dataclass(frozen=True)
class ContractedHopf:
    deformation: str
    galilei: Optional[str]
    indices: Mapping[str, int]
    hopf: HopfStructure
    diffs: Mapping[GeneratorId, CatalogDiff] = field(default_factory=dict)

    @property
    def matched(self) -> bool:
        return all(diff.matched for diff in self.diffs.values())


def contract_hopf(deformation, indices: Optional[Mapping[str, int]] = None, order: int = DEFAULT_ORDER,
                  m: ContractionMap = STANDARD_CONTRACTION, compare: bool = True) -> ContractedHopf:
    """Contract the twisted coproducts and antipodes; compare with the Galilei catalog where it has entries."""
    spec = get_spec(deformation)
    indices = canonical_indices(spec.id) if indices is None else validate_indices(spec.id, indices)
    source = twisted_hopf(build_twist(spec.id, indices, order))
    galilei = build_galilei()
    coproduct, antipode, exact = {}, {}, {}
    for g in source.algebra.generators:
        target = m.image(g).target
        coproduct[target] = contract_element(source.coproduct[g], g, m)
        antipode[target] = contract_element(source.antipode[g], g, m)
        exact[target] = source.exact.get(g, False)
    hopf = HopfStructure(
        algebra=galilei,
        order=order,
        coproduct=coproduct,
        antipode=antipode,
        counit={g: LaurentSeries.zero(order) for g in galilei.generators},
        exact=exact,
        name=f"{spec.id.value}[{m.name}]",
    )
    diffs = {}
    if compare and spec.galilei is not None:
        for g in galilei.generators:
            expected = catalog_coproduct(spec.galilei, g, indices, order)
            diffs[g] = compare_to_catalog(coproduct[g], expected)
    logger.debug(f"contracted {spec.id.value} {indices} with the {m.name} map")
    return ContractedHopf(spec.id.value, spec.galilei.value if spec.galilei else None, indices, hopf, diffs)


def contracted_antipodes(contracted: ContractedHopf) -> Dict[GeneratorId, str]:
    """S(g) for every Galilei generator, as text."""
    return {g: contracted.hopf.antipode[g].to_text() for g in contracted.hopf.algebra.generators}


def _galilei_parameters() -> Tuple[Parameter, ...]:
    return tuple(target for target, _ in _SCALED_PARAMETERS.values())


def check_galilei_classical_limit(contracted: ContractedHopf) -> CheckOutcome:
    """xi -> 0 and 1/lambda -> 0 leave primitive coproducts."""
    hopf = contracted.hopf
    for g in hopf.algebra.generators:
        limit = hopf.coproduct[g].map_coefficients(lambda c: c.substitute_zero(*_galilei_parameters()))
        residual = limit - classical_coproduct(g, hopf.algebra, hopf.order)
        if not residual.is_zero():
            return CheckOutcome(False, residual.to_text(), False, hopf.order, detail=f"classical limit of {g}")
    return CheckOutcome(True, "", True, hopf.order, detail="all parameters to zero gives primitive coproducts")


def check_limit_commutation(deformation, indices: Optional[Mapping[str, int]] = None,
                            order: int = DEFAULT_ORDER, m: ContractionMap = STANDARD_CONTRACTION) -> CheckOutcome:
    """Contracting the theta -> 0 specialisation equals sending xi -> 0 after contracting."""
    spec = get_spec(deformation)
    if not spec.generalized:
        raise ValueError(f"{spec.id.value} is not a superposed deformation")
    indices = canonical_indices(spec.id) if indices is None else validate_indices(spec.id, indices)
    theta, survivor = spec.parameters[0], spec.components[1]
    xi = m.galilei_parameter(theta)
    full = contract_hopf(spec.id, indices, order, m, compare=False).hopf
    single = contract_hopf(survivor, validate_indices(survivor, indices), order, m, compare=False).hopf
    for g in full.algebra.generators:
        residual = full.coproduct[g].map_coefficients(lambda c: c.substitute_zero(xi)) - single.coproduct[g]
        if not residual.is_zero():
            return CheckOutcome(False, residual.to_text(), False, order, detail=f"{g} at {xi.value}=0")
    return CheckOutcome(True, "", False, order, detail=f"{spec.id.value} at {xi.value}=0 vs {survivor.value}")
