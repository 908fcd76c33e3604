"""Tensor powers of the enveloping algebra."""
import itertools
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple, Union

from ..algebra import AlgebraMismatchError, LieAlgebraSpec, UEAElement, Word
from ..algebra.algebra import _accumulate, _terms_text
from ..series import DEFAULT_ORDER, LaurentSeries, ONE, gaussian

Key = Tuple[Word, ...]


class TensorElement:
    """Sum of ``coefficient * w_1 (x) ... (x) w_rank`` with every leg in PBW form."""

    __slots__ = ("algebra", "rank", "terms", "order", "truncated")

    def __init__(self, algebra: LieAlgebraSpec, rank: int, terms: Optional[Dict[Key, LaurentSeries]] = None,
                 order: int = DEFAULT_ORDER, truncated: bool = False):
        self.algebra = algebra
        self.rank = rank
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self.order = order
        self.truncated = truncated or any(c.truncated for c in self.terms.values())

    @classmethod
    def zero(cls, algebra: LieAlgebraSpec, rank: int, order: int = DEFAULT_ORDER) -> "TensorElement":
        return cls(algebra, rank, {}, order)

    @classmethod
    def unit(cls, algebra: LieAlgebraSpec, rank: int, order: int = DEFAULT_ORDER) -> "TensorElement":
        return cls(algebra, rank, {((),) * rank: LaurentSeries.one(order)}, order)

    @classmethod
    def otimes(cls, *factors: UEAElement) -> "TensorElement":
        algebra = factors[0].algebra
        order = factors[0].order
        terms: Dict[Key, LaurentSeries] = {}
        truncated = False
        for combo in itertools.product(*(f.terms.items() for f in factors)):
            coeff = LaurentSeries.one(order)
            for _, c in combo:
                coeff = coeff * c
            truncated = truncated or coeff.truncated
            _accumulate(terms, tuple(w for w, _ in combo), coeff)
        return cls(algebra, len(factors), terms, order, truncated)

    # arithmetic

    def _check(self, other: "TensorElement"):
        if other.algebra is not self.algebra or other.rank != self.rank:
            raise AlgebraMismatchError(
                f"tensor mismatch: {self.algebra.name}^{self.rank} vs {other.algebra.name}^{other.rank}"
            )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return TensorElement(self.algebra, self.rank, out, self.order, self.truncated or other.truncated)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.algebra, self.rank, {k: -c for k, c in self.terms.items()}, self.order,
                             self.truncated)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, value) -> "TensorElement":
        if isinstance(value, LaurentSeries):
            out = {k: c * value for k, c in self.terms.items()}
            return TensorElement(self.algebra, self.rank, out, self.order, self.truncated or value.truncated)
        return TensorElement(self.algebra, self.rank, {k: c.scale(value) for k, c in self.terms.items()},
                             self.order, self.truncated)

    def __mul__(self, other) -> "TensorElement":
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._check(other)
        multiply = self.algebra.multiply_words
        out: Dict[Key, LaurentSeries] = {}
        truncated = self.truncated or other.truncated
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                coeff = c1 * c2
                truncated = truncated or coeff.truncated
                if not coeff:
                    continue
                legs = [multiply(a, b) for a, b in zip(k1, k2)]
                for combo in itertools.product(*legs):
                    s = ONE
                    for _, leg_scalar in combo:
                        s = s * leg_scalar
                    key = tuple(w for w, _ in combo)
                    _accumulate(out, key, coeff if s == ONE else coeff.scale(s))
        return TensorElement(self.algebra, self.rank, out, self.order, truncated)

    def __rmul__(self, other) -> "TensorElement":
        return self.scale(other)

    def commutator(self, other: "TensorElement") -> "TensorElement":
        return self * other - other * self

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.rank == other.rank and self.terms == other.terms

    __hash__ = None

    def min_degree(self) -> int:
        return min((c.min_degree() for c in self.terms.values()), default=0)

    def map_coefficients(self, fn: Callable[[LaurentSeries], LaurentSeries]) -> "TensorElement":
        return TensorElement(self.algebra, self.rank, {k: fn(c) for k, c in self.terms.items()}, self.order,
                             self.truncated)

    def truncate(self, degree: int) -> "TensorElement":
        return TensorElement(self.algebra, self.rank, {k: c.truncate(degree) for k, c in self.terms.items()},
                             self.order, self.truncated)

    def to_text(self) -> str:
        return _terms_text(self.terms, self.algebra)

    def __repr__(self) -> str:
        return f"TensorElement[{self.rank}]({self.to_text()})"

    # leg manipulation

    def embed(self, positions: Sequence[int], rank: int) -> "TensorElement":
        """Place the legs at ``positions`` of a rank-``rank`` tensor, unit elsewhere (X -> X_12, X_23, X_13)."""
        out = {}
        for key, c in self.terms.items():
            new = [()] * rank
            for pos, w in zip(positions, key):
                new[pos] = w
            out[tuple(new)] = c
        return TensorElement(self.algebra, rank, out, self.order, self.truncated)

    def swap(self) -> "TensorElement":
        """Flip of a rank-2 tensor."""
        return TensorElement(self.algebra, 2, {(b, a): c for (a, b), c in self.terms.items()}, self.order,
                             self.truncated)

    def counit_on_leg(self, leg: int) -> Union["TensorElement", UEAElement]:
        """Apply the counit to one leg; a rank-2 tensor collapses to an enveloping-algebra element."""
        out = {}
        for key, c in self.terms.items():
            if key[leg]:
                continue
            _accumulate(out, key[:leg] + key[leg + 1:], c)
        if self.rank == 2:
            return UEAElement(self.algebra, {k[0]: c for k, c in out.items()}, self.order, self.truncated)
        return TensorElement(self.algebra, self.rank - 1, out, self.order, self.truncated)

    def expand_leg(self, leg: int, coproduct_of_word: Callable[[Word], "TensorElement"]) -> "TensorElement":
        """Apply a coproduct to one leg, producing a tensor of rank + 1."""
        out: Dict[Key, LaurentSeries] = {}
        truncated = self.truncated
        for key, c in self.terms.items():
            for (wa, wb), cd in coproduct_of_word(key[leg]).terms.items():
                coeff = c * cd
                truncated = truncated or coeff.truncated
                _accumulate(out, key[:leg] + (wa, wb) + key[leg + 1:], coeff)
        return TensorElement(self.algebra, self.rank + 1, out, self.order, truncated)

    def multiply_legs(self, left: Callable[[UEAElement], UEAElement] = None,
                      right: Callable[[UEAElement], UEAElement] = None) -> UEAElement:
        """m o (left (x) right) on a rank-2 tensor."""
        result = UEAElement.zero(self.algebra, self.order)
        for (wa, wb), c in self.terms.items():
            a = UEAElement(self.algebra, {wa: LaurentSeries.one(self.order)}, self.order)
            b = UEAElement(self.algebra, {wb: LaurentSeries.one(self.order)}, self.order)
            if left is not None:
                a = left(a)
            if right is not None:
                b = right(b)
            result = result + (a * b).scale(c)
        return result


def wedge(a: UEAElement, b: UEAElement) -> TensorElement:
    """a ^ b = a (x) b - b (x) a"""
    return TensorElement.otimes(a, b) - TensorElement.otimes(b, a)


def perp(a: UEAElement, b: UEAElement) -> TensorElement:
    """a _|_ b = a (x) b + b (x) a"""
    return TensorElement.otimes(a, b) + TensorElement.otimes(b, a)


Exponentiable = Union[UEAElement, TensorElement]


def exponential(x: Exponentiable, one: Exponentiable) -> Tuple[Exponentiable, bool]:
    """Truncated ``exp(x)`` and whether the series terminated on its own.

    ``x`` must have no parameter-free part, so every power raises the degree
    and the truncation order bounds the number of terms.
    """
    if x.terms and x.min_degree() < 1:
        raise ValueError("exponent must vanish at zero deformation parameters")
    result = one
    term = one
    for n in range(1, x.order + 2):
        term = (term * x).scale(gaussian(Fraction(1, n)))
        if term.is_zero():
            return result, not term.truncated
        result = result + term
    return result, False
