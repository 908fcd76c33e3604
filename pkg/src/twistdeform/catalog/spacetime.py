"""Printed space-time commutator tables [x_mu, x_nu]."""
from functools import partial
from typing import Callable, Dict, Mapping, Tuple

from ..algebra import kron
from ..deformations import DeformationId, get_spec, validate_indices
from ..deformations.deformations import SPATIAL
from ..series import DEFAULT_ORDER, LaurentSeries, Parameter, gaussian
from ..spacetime.functions import PolyFunction
from .equations import SPACETIME

CommutatorTable = Dict[Tuple[int, int], PolyFunction]


def _scaled(param: Parameter, coeff, order: int) -> LaurentSeries:
    return LaurentSeries.parameter(param, gaussian(*coeff), order)


def _fill(time_space: Callable[[int], PolyFunction], space_space: Callable[[int, int], PolyFunction],
          order: int) -> CommutatorTable:
    """Antisymmetric 4x4 table from [x0, x_a] and [x_a, x_b] with a < b."""
    table: CommutatorTable = {(mu, mu): PolyFunction.zero(order) for mu in range(4)}
    for a in SPATIAL:
        table[(0, a)] = time_space(a)
        table[(a, 0)] = -table[(0, a)]
        for b in SPATIAL:
            if a < b:
                table[(a, b)] = space_space(a, b)
                table[(b, a)] = -table[(a, b)]
    return table


def _theta_kl_kappa(ix: Mapping[str, int], order: int) -> CommutatorTable:
    k, l, i = ix["k"], ix["l"], ix["i"]
    i_over_kappa = _scaled(Parameter.INV_KAPPA, (0, 1), order)
    two_i_theta = _scaled(Parameter.THETA_KL, (0, 2), order)
    x = partial(PolyFunction.coordinate, order=order)

    def time_space(a):
        return x(i).scale(i_over_kappa).scale(kron(a, k))

    def space_space(a, b):
        canonical = PolyFunction.constant(two_i_theta.scale(kron(a, k) * kron(b, l) - kron(a, l) * kron(b, k)), order)
        linear = x(0).scale(i_over_kappa).scale(kron(i, a) * kron(k, b) - kron(k, a) * kron(i, b))
        return canonical + linear

    return _fill(time_space, space_space, order)


def _theta_0i_kappa_hat(ix: Mapping[str, int], order: int) -> CommutatorTable:
    k, l, i = ix["k"], ix["l"], ix["i"]
    i_over_kappa = _scaled(Parameter.INV_KAPPA_HAT, (0, 1), order)
    two_i_theta = _scaled(Parameter.THETA_0I, (0, 2), order)
    x = partial(PolyFunction.coordinate, order=order)

    def time_space(a):
        rotation = (x(k).scale(kron(l, a)) - x(l).scale(kron(k, a))).scale(i_over_kappa)
        return rotation + PolyFunction.constant(two_i_theta.scale(kron(i, a)), order)

    return _fill(time_space, lambda a, b: PolyFunction.zero(order), order)


def _theta_0i_kappa_bar(ix: Mapping[str, int], order: int) -> CommutatorTable:
    k, l, i = ix["k"], ix["l"], ix["i"]
    i_over_kappa = _scaled(Parameter.INV_KAPPA_BAR, (0, 1), order)
    two_i_theta = _scaled(Parameter.THETA_0I, (0, 2), order)
    x = partial(PolyFunction.coordinate, order=order)

    def time_space(a):
        return PolyFunction.constant(two_i_theta.scale(kron(i, a)), order)

    def space_space(a, b):
        first = (x(l).scale(kron(k, a)) - x(k).scale(kron(l, a))).scale(kron(i, b))
        second = (x(k).scale(kron(l, b)) - x(l).scale(kron(k, b))).scale(kron(i, a))
        return (first + second).scale(i_over_kappa)

    return _fill(time_space, space_space, order)


_GENERALIZED = {
    DeformationId.THETA_KL_KAPPA: _theta_kl_kappa,
    DeformationId.THETA_0I_KAPPA_HAT: _theta_0i_kappa_hat,
    DeformationId.THETA_0I_KAPPA_BAR: _theta_0i_kappa_bar,
}

# single deformations as parameter limits of the superposed tables
_LIMITS = {
    DeformationId.THETA_KL: (DeformationId.THETA_KL_KAPPA, Parameter.INV_KAPPA),
    DeformationId.KAPPA: (DeformationId.THETA_KL_KAPPA, Parameter.THETA_KL),
    DeformationId.THETA_0I: (DeformationId.THETA_0I_KAPPA_HAT, Parameter.INV_KAPPA_HAT),
    DeformationId.KAPPA_HAT: (DeformationId.THETA_0I_KAPPA_HAT, Parameter.THETA_0I),
    DeformationId.KAPPA_BAR: (DeformationId.THETA_0I_KAPPA_BAR, Parameter.THETA_0I),
}


def complete_indices(indices: Mapping[str, int]) -> Dict[str, int]:
    """Give k, l, i the spatial values left over, in that order, where they are missing."""
    out = dict(indices)
    free = [v for v in SPATIAL if v not in out.values()]
    for name in ("k", "l", "i"):
        if name not in out:
            out[name] = free.pop(0)
    return out


def spacetime_key(deformation) -> str:
    return f"spacetime/{get_spec(deformation).id.value}"


def spacetime_equation(deformation) -> str:
    """Tag of the printed table; single deformations carry the tag of the table they are a limit of."""
    spec = get_spec(deformation)
    parent = spec.id if spec.id in _GENERALIZED else _LIMITS[spec.id][0]
    return SPACETIME[parent]


def catalog_spacetime(deformation, indices: Mapping[str, int], order: int = DEFAULT_ORDER) -> CommutatorTable:
    """Printed right-hand sides of every [x_mu, x_nu], keyed by (mu, nu)."""
    spec = get_spec(deformation)
    indices = validate_indices(spec.id, indices)
    if spec.id in _GENERALIZED:
        return _GENERALIZED[spec.id](indices, order)
    parent, vanishing = _LIMITS[spec.id]
    table = _GENERALIZED[parent](complete_indices(indices), order)
    return {key: value.substitute_zero(vanishing) for key, value in table.items()}
