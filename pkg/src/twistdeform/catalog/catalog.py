"""Lookup, evaluation and comparison of the closed-form catalog."""
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

from ..algebra import GeneratorId, LieAlgebraSpec, build_galilei, build_poincare
from ..deformations import (
    ALL_DEFORMATIONS,
    DeformationId,
    GalileiDeformationId,
    UnknownDeformationError,
    canonical_indices,
    format_indices,
    get_spec,
    parse_deformation,
    validate_indices,
)
from ..hopf import CheckOutcome, TensorElement
from ..series import DEFAULT_ORDER, Parameter
from .expressions import EvalContext
from .galilei import GALILEI_ENTRIES
from .poincare import POINCARE_ENTRIES, CatalogEntry
from .spacetime import catalog_spacetime, spacetime_equation, spacetime_key

logger = logging.getLogger(__name__)

AnyDeformation = Union[DeformationId, GalileiDeformationId]


# Domain exceptions for deterministic error handling

class CatalogError(Exception):
    pass


def catalog_entries() -> Tuple[CatalogEntry, ...]:
    return POINCARE_ENTRIES + GALILEI_ENTRIES


def resolve_deformation(name) -> AnyDeformation:
    """Poincare id, or the Galilei id of a contracted case."""
    if isinstance(name, (DeformationId, GalileiDeformationId)):
        return name
    try:
        return parse_deformation(name)
    except UnknownDeformationError:
        try:
            return GalileiDeformationId(str(name).strip())
        except ValueError:
            known = ", ".join([d.value for d in DeformationId] + [d.value for d in GalileiDeformationId])
            raise UnknownDeformationError(f"unknown deformation '{name}' (known: {known})")


def relativistic_parent(galilei: GalileiDeformationId) -> DeformationId:
    for deformation in ALL_DEFORMATIONS:
        if get_spec(deformation).galilei == galilei:
            return deformation
    raise UnknownDeformationError(f"no relativistic deformation contracts to {galilei.value}")


def _selectors(g: GeneratorId) -> Tuple[str, ...]:
    if g.kind == "Pi":
        return ("Pi0", "Pi") if g.indices[0] == 0 else ("Pia", "Pi")
    return (g.kind,)


def find_entry(deformation, g: GeneratorId) -> CatalogEntry:
    deformation = resolve_deformation(deformation)
    for selector in _selectors(g):
        for entry in catalog_entries():
            if entry.deformation == deformation.value and entry.selector == selector:
                return entry
    raise CatalogError(f"no catalog entry for {deformation.value} and generator {g}")


def _algebra_of(entry: CatalogEntry) -> LieAlgebraSpec:
    return build_galilei() if entry.algebra == "galilei" else build_poincare()


def _checked_indices(deformation: AnyDeformation, indices: Optional[Mapping[str, int]]) -> Dict[str, int]:
    relativistic = relativistic_parent(deformation) if isinstance(deformation, GalileiDeformationId) else deformation
    if indices is None:
        return canonical_indices(relativistic)
    return validate_indices(relativistic, indices)


def evaluate_entry(entry: CatalogEntry, g: GeneratorId, indices: Mapping[str, int],
                   order: int = DEFAULT_ORDER, algebra: Optional[LieAlgebraSpec] = None) -> TensorElement:
    """Bind the free indices from ``g`` and evaluate the closed form."""
    algebra = algebra or _algebra_of(entry)
    bound = dict(zip(entry.free, g.indices))
    ctx = EvalContext(algebra, order, {**indices, **bound})
    return entry.expression.evaluate(ctx)


def catalog_coproduct(deformation, g: GeneratorId, indices: Optional[Mapping[str, int]] = None,
                      order: int = DEFAULT_ORDER) -> TensorElement:
    """Printed coproduct of ``g`` for a deformation, truncated at ``order``."""
    deformation = resolve_deformation(deformation)
    indices = _checked_indices(deformation, indices)
    entry = find_entry(deformation, g)
    logger.debug(f"catalog {entry.key} for {g} at {format_indices(indices)}")
    return evaluate_entry(entry, g, indices, order)


@dataclass(frozen=True)
class CatalogDiff:
    """computed - expected; ``offending`` lists the surviving terms one by one."""

    matched: bool
    residual: str
    offending: Tuple[str, ...] = ()


def compare_to_catalog(computed: TensorElement, expected: TensorElement) -> CatalogDiff:
    difference = computed - expected
    if difference.is_zero():
        return CatalogDiff(matched=True, residual="")
    offending = tuple(
        TensorElement(difference.algebra, difference.rank, {key: c}, difference.order).to_text()
        for key, c in sorted(difference.terms.items())
    )
    return CatalogDiff(matched=False, residual=difference.to_text(), offending=offending)


def catalog_reduction(deformation, g: GeneratorId, vanishing: Parameter,
                      indices: Optional[Mapping[str, int]] = None, order: int = DEFAULT_ORDER) -> CheckOutcome:
    """Set one parameter of a superposed entry to zero and compare with the surviving single entry."""
    spec = get_spec(deformation)
    if not spec.generalized:
        raise CatalogError(f"{spec.id.value} is not a superposed deformation")
    if vanishing not in spec.parameters:
        raise CatalogError(f"{vanishing.value} is not a parameter of {spec.id.value}")
    survivor = spec.components[1] if vanishing == spec.parameters[0] else spec.components[0]
    indices = _checked_indices(spec.id, indices)
    reduced = catalog_coproduct(spec.id, g, indices, order).map_coefficients(lambda c: c.substitute_zero(vanishing))
    single = catalog_coproduct(survivor, g, validate_indices(survivor, indices), order)
    diff = compare_to_catalog(reduced, single)
    return CheckOutcome(
        passed=diff.matched,
        residual=diff.residual,
        exact=False,
        order=order,
        detail=f"{find_entry(spec.id, g).key} at {vanishing.value}=0 vs {find_entry(survivor, g).key}",
    )


def dump_catalog(order: int = DEFAULT_ORDER) -> List[dict]:
    """Every entry as plain data, followed by the space-time tables at canonical indices."""
    out = []
    for entry in catalog_entries():
        out.append({
            "key": entry.key,
            "equation": entry.equation,
            "deformation": entry.deformation,
            "algebra": entry.algebra,
            "generator": entry.pattern,
            "formula": entry.expression.render(),
            "notes": list(entry.notes),
        })
    for deformation in ALL_DEFORMATIONS:
        indices = canonical_indices(deformation)
        table = catalog_spacetime(deformation, indices, order)
        out.append({
            "key": spacetime_key(deformation),
            "equation": spacetime_equation(deformation),
            "deformation": deformation.value,
            "algebra": "poincare",
            "indices": format_indices(indices),
            "commutators": {
                f"[x{mu},x{nu}]": table[(mu, nu)].to_text() for (mu, nu) in sorted(table) if mu < nu
            },
            "notes": [],
        })
    return out
