"""Exact coefficient arithmetic.

Gaussian rationals come from sympy's ``QQ_I`` domain. ``LaurentSeries`` is a
truncated multivariate series in the formal deformation parameters with
Gaussian-rational coefficients; it is the coefficient ring of every algebraic
object in the package.
"""
import enum
import operator
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

import sympy
from sympy.polys.domains import QQ, QQ_I

GaussianRational = QQ_I.dtype

DEFAULT_ORDER = 4


# Domain exceptions for deterministic error handling

class SeriesError(Exception):
    pass


class TruncationOrderMismatchError(SeriesError):
    pass


class DivergenceError(SeriesError):
    """A positive power of c survived a c -> infinity limit."""

    def __init__(self, message: str, term: Optional[str] = None, generator: Optional[str] = None):
        super().__init__(message)
        self.term = term
        self.generator = generator


class Parameter(enum.Enum):
    THETA_KL = "theta_kl"
    THETA_0I = "theta_0i"
    INV_KAPPA = "1/kappa"
    INV_KAPPA_HAT = "1/kappa_hat"
    INV_KAPPA_BAR = "1/kappa_bar"
    XI_KL = "xi_kl"
    XI_0I = "xi_0i"
    INV_LAMBDA = "1/lambda"
    INV_LAMBDA_HAT = "1/lambda_hat"
    INV_LAMBDA_BAR = "1/lambda_bar"
    INV_C = "1/c"

    @property
    def base_name(self) -> str:
        """Printed symbol; inverse parameters print as negative powers of their base."""
        return self.value[2:] if self.value.startswith("1/") else self.value

    @property
    def inverse(self) -> bool:
        return self.value.startswith("1/")


PARAMETERS: Tuple[Parameter, ...] = tuple(Parameter)
_SLOT: Dict[Parameter, int] = {p: n for n, p in enumerate(PARAMETERS)}
C_SLOT = _SLOT[Parameter.INV_C]
_WIDTH = len(PARAMETERS)
_ZERO_EXPONENTS = (0,) * _WIDTH

Exponents = Tuple[int, ...]


def _to_qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        parsed = Fraction(value)
        return QQ(parsed.numerator, parsed.denominator)
    return QQ.convert(value)


def gaussian(re=0, im=0) -> GaussianRational:
    """Build ``re + i*im`` from ints, Fractions, strings like ``"1/2"`` or QQ elements."""
    return GaussianRational(_to_qq(re), _to_qq(im))


def as_gaussian(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return gaussian(value)


ZERO = gaussian(0)
ONE = gaussian(1)
IMAG = gaussian(0, 1)


def _format_rational(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text: ``3/2``, ``-i``, ``1/2*i``, ``(1+2*i)``."""
    re, im = z.x, z.y
    if not im:
        return _format_rational(re)
    if im == 1:
        im_text = "i"
    elif im == -1:
        im_text = "-i"
    else:
        im_text = f"{_format_rational(im)}*i"
    if not re:
        return im_text
    sign = "" if im_text.startswith("-") else "+"
    return f"({_format_rational(re)}{sign}{im_text})"


def _degree(exps: Exponents) -> int:
    # 1/c is a bookkeeping variable, not a deformation parameter
    return sum(exps) - exps[C_SLOT]


class LaurentSeries:
    """Truncated series ``sum c_e * prod p**e_p`` over the formal parameters.

    Terms whose total degree in the deformation parameters exceeds ``order``
    are discarded and ``truncated`` is set. Only ``1/c`` may carry negative
    exponents. Equality is structural on the term map.
    """

    __slots__ = ("terms", "order", "truncated")

    def __init__(self, terms: Optional[Mapping[Iterable[int], object]] = None, order: int = DEFAULT_ORDER,
                 truncated: bool = False):
        if order < 0:
            raise SeriesError(f"truncation order must be >= 0, got {order}")
        clean: Dict[Exponents, GaussianRational] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != _WIDTH:
                raise SeriesError(f"expected {_WIDTH} exponents, got {len(exps)}")
            for slot, e in enumerate(exps):
                if e < 0 and slot != C_SLOT:
                    raise SeriesError(f"negative exponent on {PARAMETERS[slot].value}")
            if _degree(exps) > order:
                truncated = True
                continue
            coeff = as_gaussian(coeff)
            if coeff:
                clean[exps] = clean.get(exps, ZERO) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self.order = order
        self.truncated = truncated

    @classmethod
    def _raw(cls, terms: Dict[Exponents, GaussianRational], order: int, truncated: bool) -> "LaurentSeries":
        obj = object.__new__(cls)
        obj.terms = terms
        obj.order = order
        obj.truncated = truncated
        return obj

    # constructors

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls._raw({}, order, False)

    @classmethod
    def constant(cls, value=1, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        value = as_gaussian(value)
        return cls._raw({_ZERO_EXPONENTS: value} if value else {}, order, False)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, powers: Mapping[Parameter, int], coeff=1, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        exps = [0] * _WIDTH
        for param, power in powers.items():
            exps[_SLOT[param]] += power
        return cls({tuple(exps): coeff}, order)

    @classmethod
    def parameter(cls, param: Parameter, coeff=1, order: int = DEFAULT_ORDER) -> "LaurentSeries":
        return cls.monomial({param: 1}, coeff, order)

    # arithmetic

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            if other.order != self.order:
                raise TruncationOrderMismatchError(
                    f"truncation orders differ: {self.order} vs {other.order}"
                )
            return other
        return LaurentSeries.constant(other, self.order)

    def __add__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = out.get(exps)
            if total is None:
                out[exps] = coeff
                continue
            total = total + coeff
            if total:
                out[exps] = total
            else:
                del out[exps]
        return LaurentSeries._raw(out, self.order, self.truncated or other.truncated)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries._raw({e: -c for e, c in self.terms.items()}, self.order, self.truncated)

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentSeries":
        return self._coerce(other) - self

    def scale(self, value) -> "LaurentSeries":
        value = as_gaussian(value)
        if not value:
            return LaurentSeries._raw({}, self.order, self.truncated)
        return LaurentSeries._raw({e: c * value for e, c in self.terms.items()}, self.order, self.truncated)

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        other = self._coerce(other)
        order = self.order
        truncated = self.truncated or other.truncated
        out: Dict[Exponents, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            d1 = _degree(e1)
            for e2, c2 in other.terms.items():
                if d1 + _degree(e2) > order:
                    truncated = True
                    continue
                exps = tuple(map(operator.add, e1, e2))
                coeff = c1 * c2
                prev = out.get(exps)
                if prev is not None:
                    coeff = prev + coeff
                    if not coeff:
                        del out[exps]
                        continue
                out[exps] = coeff
        return LaurentSeries._raw(out, order, truncated)

    def __rmul__(self, other) -> "LaurentSeries":
        return self.scale(other)

    def __pow__(self, power: int) -> "LaurentSeries":
        if power < 0:
            raise SeriesError("negative powers of a series are not supported")
        result = LaurentSeries.one(self.order)
        for _ in range(power):
            result = result * self
        return result

    # predicates and comparison

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentSeries):
            return self.terms == other.terms
        try:
            return self.terms == LaurentSeries.constant(other, self.order).terms
        except Exception:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def min_degree(self) -> int:
        return min((_degree(e) for e in self.terms), default=0)

    def max_degree(self) -> int:
        return max((_degree(e) for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXPONENTS for e in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get(_ZERO_EXPONENTS, ZERO)

    # truncation and substitution

    def truncate(self, degree: int) -> "LaurentSeries":
        """Drop terms above ``degree``, keeping the truncation order tag."""
        kept = {e: c for e, c in self.terms.items() if _degree(e) <= degree}
        return LaurentSeries._raw(kept, self.order, self.truncated or len(kept) != len(self.terms))

    def with_order(self, order: int) -> "LaurentSeries":
        """Re-tag with a new truncation order, dropping what no longer fits."""
        kept = {e: c for e, c in self.terms.items() if _degree(e) <= order}
        return LaurentSeries._raw(kept, order, self.truncated or len(kept) != len(self.terms))

    def homogeneous_part(self, degree: int) -> "LaurentSeries":
        return LaurentSeries._raw(
            {e: c for e, c in self.terms.items() if _degree(e) == degree}, self.order, self.truncated
        )

    def substitute_zero(self, *params: Parameter) -> "LaurentSeries":
        slots = [_SLOT[p] for p in params]
        kept = {e: c for e, c in self.terms.items() if all(e[s] == 0 for s in slots)}
        return LaurentSeries._raw(kept, self.order, self.truncated)

    def substitute_parameters(self, mapping: Mapping[Parameter, Tuple[Parameter, int]]) -> "LaurentSeries":
        """Replace ``p`` by ``target * c**power`` for each ``p -> (target, power)``."""
        out: Dict[Exponents, GaussianRational] = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            for param, (target, c_power) in mapping.items():
                slot = _SLOT[param]
                e = exps[slot]
                if not e:
                    continue
                new[slot] -= e
                new[_SLOT[target]] += e
                new[C_SLOT] -= c_power * e
            key = tuple(new)
            total = out.get(key, ZERO) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return LaurentSeries._raw(out, self.order, self.truncated)

    def times_c_power(self, power: int) -> "LaurentSeries":
        """Multiply by ``c**power``."""
        out = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            new[C_SLOT] -= power
            out[tuple(new)] = coeff
        return LaurentSeries._raw(out, self.order, self.truncated)

    def c_powers(self) -> Tuple[int, ...]:
        """Powers of c present, sorted (a ``1/c`` exponent of -2 is c**2)."""
        return tuple(sorted({-e[C_SLOT] for e in self.terms}))

    def limit_c_to_infinity(self) -> "LaurentSeries":
        kept = {}
        for exps, coeff in self.terms.items():
            c_power = -exps[C_SLOT]
            if c_power > 0:
                term = LaurentSeries._raw({exps: coeff}, self.order, False)
                raise DivergenceError(f"term {term.to_text()} grows like c^{c_power}", term=term.to_text())
            if c_power == 0:
                kept[exps] = coeff
        return LaurentSeries._raw(kept, self.order, self.truncated)

    # rendering

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            factors = []
            for slot, e in enumerate(exps):
                if not e:
                    continue
                param = PARAMETERS[slot]
                power = -e if param.inverse else e
                factors.append(param.base_name if power == 1 else f"{param.base_name}^{power}")
            monomial = "*".join(factors)
            if not monomial:
                parts.append(format_gaussian(coeff))
            elif coeff == ONE:
                parts.append(monomial)
            elif coeff == -ONE:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{format_gaussian(coeff)}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_sympy(self) -> sympy.Expr:
        expr = sympy.Integer(0)
        for exps, coeff in self.terms.items():
            term = QQ_I.to_sympy(coeff)
            for slot, e in enumerate(exps):
                if e:
                    param = PARAMETERS[slot]
                    symbol = sympy.Symbol(param.base_name, positive=True)
                    term *= symbol ** (-e if param.inverse else e)
            expr += term
        return expr

    def __repr__(self) -> str:
        return f"LaurentSeries({self.to_text()}, order={self.order})"


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def series_limit_c_to_infinity(a: LaurentSeries) -> LaurentSeries:
    return a.limit_c_to_infinity()
