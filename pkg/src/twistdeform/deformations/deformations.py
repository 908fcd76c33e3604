"""Registry of the eight twist deformations and their index rules."""
import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from ..series import DEFAULT_ORDER, LaurentSeries, Parameter, gaussian

SPATIAL = (1, 2, 3)
CANONICAL_INDICES = {"k": 1, "l": 2, "i": 3}


# Domain exceptions for deterministic error handling

class IndexConstraintError(ValueError):
    pass


class UnknownDeformationError(ValueError):
    pass


class DeformationId(str, enum.Enum):
    THETA_KL = "theta_kl"
    THETA_0I = "theta_0i"
    KAPPA = "kappa"
    KAPPA_HAT = "kappa_hat"
    KAPPA_BAR = "kappa_bar"
    THETA_KL_KAPPA = "theta_kl+kappa"
    THETA_0I_KAPPA_HAT = "theta_0i+kappa_hat"
    THETA_0I_KAPPA_BAR = "theta_0i+kappa_bar"


class GalileiDeformationId(str, enum.Enum):
    XI_KL_LAMBDA = "xi_kl+lambda"
    XI_0I_LAMBDA_HAT = "xi_0i+lambda_hat"
    XI_0I_LAMBDA_BAR = "xi_0i+lambda_bar"


# (coefficient, X, Y) for one term c * X ^ Y; X and Y are (kind, indices) and may be unordered
RTerm = Tuple[LaurentSeries, Tuple[str, Tuple[int, ...]], Tuple[str, Tuple[int, ...]]]


def _half(param: Parameter, order: int) -> LaurentSeries:
    return LaurentSeries.parameter(param, gaussian("1/2"), order)


def _theta_kl_terms(ix: Mapping[str, int], order: int) -> List[RTerm]:
    return [(LaurentSeries.parameter(Parameter.THETA_KL, 1, order), ("P", (ix["k"],)), ("P", (ix["l"],)))]


def _theta_0i_terms(ix: Mapping[str, int], order: int) -> List[RTerm]:
    return [(LaurentSeries.parameter(Parameter.THETA_0I, 1, order), ("P", (0,)), ("P", (ix["i"],)))]


def _kappa_terms(ix: Mapping[str, int], order: int) -> List[RTerm]:
    return [(_half(Parameter.INV_KAPPA, order), ("P", (ix["k"],)), ("M", (ix["i"], 0)))]


def _kappa_hat_terms(ix: Mapping[str, int], order: int) -> List[RTerm]:
    return [(_half(Parameter.INV_KAPPA_HAT, order), ("P", (0,)), ("M", (ix["k"], ix["l"])))]


def _kappa_bar_terms(ix: Mapping[str, int], order: int) -> List[RTerm]:
    return [(_half(Parameter.INV_KAPPA_BAR, order), ("P", (ix["i"],)), ("M", (ix["k"], ix["l"])))]


@dataclass(frozen=True)
class DeformationSpec:
    id: DeformationId
    index_names: Tuple[str, ...]
    constraint: str
    parameters: Tuple[Parameter, ...]
    terms: Callable[[Mapping[str, int], int], List[RTerm]]
    components: Optional[Tuple[DeformationId, DeformationId]] = None
    galilei: Optional[GalileiDeformationId] = None
    description: str = ""

    @property
    def generalized(self) -> bool:
        return self.components is not None

    def rmatrix_terms(self, indices: Mapping[str, int], order: int = DEFAULT_ORDER) -> List[RTerm]:
        return self.terms(validate_indices(self.id, indices), order)


def _sum_terms(*builders):
    def build(ix, order):
        out = []
        for builder in builders:
            out.extend(builder(ix, order))
        return out
    return build


_SPECS: Dict[DeformationId, DeformationSpec] = {
    spec.id: spec
    for spec in (
        DeformationSpec(DeformationId.THETA_KL, ("k", "l"), "[k,l fixed, k != l]",
                        (Parameter.THETA_KL,), _theta_kl_terms,
                        description="canonical space-space twist exp(i theta_kl P_k ^ P_l)"),
        DeformationSpec(DeformationId.THETA_0I, ("i",), "[i fixed]",
                        (Parameter.THETA_0I,), _theta_0i_terms,
                        description="canonical time-space twist exp(i theta_0i P_0 ^ P_i)"),
        DeformationSpec(DeformationId.KAPPA, ("i", "k"), "[i,k fixed, i != k]",
                        (Parameter.INV_KAPPA,), _kappa_terms,
                        description="Lie-algebraic twist exp((i/2kappa) P_k ^ M_i0)"),
        DeformationSpec(DeformationId.KAPPA_HAT, ("k", "l"), "[k,l fixed, k != l]",
                        (Parameter.INV_KAPPA_HAT,), _kappa_hat_terms,
                        description="Lie-algebraic twist exp((i/2kappa_hat) P_0 ^ M_kl)"),
        DeformationSpec(DeformationId.KAPPA_BAR, ("i", "k", "l"), "[i,k,l fixed, i != k,l]",
                        (Parameter.INV_KAPPA_BAR,), _kappa_bar_terms,
                        description="Lie-algebraic twist exp((i/2kappa_bar) P_i ^ M_kl)"),
        DeformationSpec(DeformationId.THETA_KL_KAPPA, ("k", "l", "i"), "[k,l,i fixed, k,l != i]",
                        (Parameter.THETA_KL, Parameter.INV_KAPPA), _sum_terms(_kappa_terms, _theta_kl_terms),
                        components=(DeformationId.THETA_KL, DeformationId.KAPPA),
                        galilei=GalileiDeformationId.XI_KL_LAMBDA,
                        description="superposed theta_kl and kappa twists"),
        DeformationSpec(DeformationId.THETA_0I_KAPPA_HAT, ("k", "l", "i"), "[k,l,i fixed, i != k,l]",
                        (Parameter.THETA_0I, Parameter.INV_KAPPA_HAT),
                        _sum_terms(_kappa_hat_terms, _theta_0i_terms),
                        components=(DeformationId.THETA_0I, DeformationId.KAPPA_HAT),
                        galilei=GalileiDeformationId.XI_0I_LAMBDA_HAT,
                        description="superposed theta_0i and kappa_hat twists"),
        DeformationSpec(DeformationId.THETA_0I_KAPPA_BAR, ("k", "l", "i"), "[k,l,i fixed, i != k,l]",
                        (Parameter.THETA_0I, Parameter.INV_KAPPA_BAR),
                        _sum_terms(_kappa_bar_terms, _theta_0i_terms),
                        components=(DeformationId.THETA_0I, DeformationId.KAPPA_BAR),
                        galilei=GalileiDeformationId.XI_0I_LAMBDA_BAR,
                        description="superposed theta_0i and kappa_bar twists"),
    )
}

BASIC_DEFORMATIONS = (DeformationId.THETA_KL, DeformationId.THETA_0I, DeformationId.KAPPA,
                      DeformationId.KAPPA_HAT, DeformationId.KAPPA_BAR)
GENERALIZED_DEFORMATIONS = (DeformationId.THETA_KL_KAPPA, DeformationId.THETA_0I_KAPPA_HAT,
                            DeformationId.THETA_0I_KAPPA_BAR)
ALL_DEFORMATIONS = BASIC_DEFORMATIONS + GENERALIZED_DEFORMATIONS


def parse_deformation(name) -> DeformationId:
    if isinstance(name, DeformationId):
        return name
    try:
        return DeformationId(str(name).strip())
    except ValueError:
        known = ", ".join(d.value for d in DeformationId)
        raise UnknownDeformationError(f"unknown deformation '{name}' (known: {known})")


def get_spec(name) -> DeformationSpec:
    return _SPECS[parse_deformation(name)]


def validate_indices(name, indices: Mapping[str, int]) -> Dict[str, int]:
    """Restrict ``indices`` to the names the deformation uses and enforce its constraint."""
    spec = get_spec(name)
    chosen = {}
    for key in spec.index_names:
        if key not in indices:
            raise IndexConstraintError(f"{spec.id.value}: missing index '{key}' {spec.constraint}")
        value = int(indices[key])
        if value not in SPATIAL:
            raise IndexConstraintError(
                f"{spec.id.value}: index {key}={value} must be spatial (1..3) {spec.constraint}"
            )
        chosen[key] = value
    if len(set(chosen.values())) != len(chosen):
        shown = ",".join(f"{k}={v}" for k, v in chosen.items())
        raise IndexConstraintError(f"{spec.id.value}: indices {shown} violate {spec.constraint}")
    return chosen


def canonical_indices(name) -> Dict[str, int]:
    spec = get_spec(name)
    return {key: CANONICAL_INDICES[key] for key in spec.index_names}


def admissible_indices(name) -> List[Dict[str, int]]:
    spec = get_spec(name)
    return [dict(zip(spec.index_names, values))
            for values in itertools.permutations(SPATIAL, len(spec.index_names))]


def parse_indices(text: str) -> Dict[str, int]:
    """``"k=1,l=2,i=3"`` -> ``{"k": 1, "l": 2, "i": 3}``."""
    out = {}
    for chunk in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = chunk.partition("=")
        if not sep or key.strip() not in ("k", "l", "i"):
            raise IndexConstraintError(f"cannot parse index assignment '{chunk}' (expected k=.., l=.., i=..)")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise IndexConstraintError(f"index {key.strip()} must be an integer, got '{value}'")
    return out


def format_indices(indices: Mapping[str, int]) -> str:
    return ",".join(f"{k}={indices[k]}" for k in ("k", "l", "i") if k in indices)
