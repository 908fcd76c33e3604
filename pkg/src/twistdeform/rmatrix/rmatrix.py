"""Classical r-matrices, the Schouten bracket and the classical Yang-Baxter check."""
import itertools
import logging
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..algebra import AlgebraMismatchError, GeneratorId, LieAlgebraSpec, UEAElement, build_poincare
from ..deformations import get_spec, validate_indices
from ..hopf import CheckOutcome, TensorElement, wedge
from ..series import DEFAULT_ORDER, LaurentSeries

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


class RMatrix:
    """Bivector sum c * X ^ Y, stored with X before Y in PBW order."""

    __slots__ = ("algebra", "terms", "order", "name")

    def __init__(self, algebra: LieAlgebraSpec, terms: Optional[Mapping[Pair, LaurentSeries]] = None,
                 order: int = DEFAULT_ORDER, name: str = ""):
        self.algebra = algebra
        self.terms: Dict[Pair, LaurentSeries] = {k: c for k, c in (terms or {}).items() if c}
        self.order = order
        self.name = name

    @classmethod
    def from_terms(cls, algebra: LieAlgebraSpec,
                   terms: Iterable[Tuple[LaurentSeries, Tuple[str, Tuple[int, ...]], Tuple[str, Tuple[int, ...]]]],
                   order: int = DEFAULT_ORDER, name: str = "") -> "RMatrix":
        out: Dict[Pair, LaurentSeries] = {}
        for coeff, (xk, xi), (yk, yi) in terms:
            x, y = algebra.signed(xk, *xi), algebra.signed(yk, *yi)
            if x is None or y is None:
                continue
            (sx, gx), (sy, gy) = x, y
            px, py = algebra.position(gx), algebra.position(gy)
            if px == py:
                continue
            sign = sx * sy
            if px > py:
                px, py, sign = py, px, -sign
            value = coeff.scale(sign)
            key = (px, py)
            out[key] = out[key] + value if key in out else value
        return cls(algebra, out, order, name)

    def __add__(self, other: "RMatrix") -> "RMatrix":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return RMatrix(self.algebra, out, self.order, self.name or other.name)

    def scale(self, value) -> "RMatrix":
        if isinstance(value, LaurentSeries):
            return RMatrix(self.algebra, {k: c * value for k, c in self.terms.items()}, self.order, self.name)
        return RMatrix(self.algebra, {k: c.scale(value) for k, c in self.terms.items()}, self.order, self.name)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def generators(self) -> Tuple[GeneratorId, ...]:
        positions = sorted({p for pair in self.terms for p in pair})
        return tuple(self.algebra.generators[p] for p in positions)

    def tensor_form(self) -> List[Tuple[LaurentSeries, int, int]]:
        """Expanded as sum r^{ab} a (x) b with antisymmetric r^{ab}."""
        out = []
        for (a, b), c in self.terms.items():
            out.append((c, a, b))
            out.append((-c, b, a))
        return out

    def to_tensor(self) -> TensorElement:
        total = TensorElement.zero(self.algebra, 2, self.order)
        for (a, b), c in self.terms.items():
            x = UEAElement.of(self.algebra, self.algebra.generators[a], self.order)
            y = UEAElement.of(self.algebra, self.algebra.generators[b], self.order)
            total = total + wedge(x, y).scale(c)
        return total

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            coeff = self.terms[(a, b)].to_text()
            pair = f"{self.algebra.generators[a]}^{self.algebra.generators[b]}"
            parts.append(pair if coeff == "1" else f"({coeff})*{pair}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RMatrix({self.to_text()})"


class TrivectorElement:
    """Fully antisymmetric element of the triple wedge power, keyed by increasing position triples."""

    __slots__ = ("algebra", "terms", "truncated")

    def __init__(self, algebra: LieAlgebraSpec, terms: Optional[Mapping[Triple, LaurentSeries]] = None,
                 truncated: bool = False):
        self.algebra = algebra
        self.terms: Dict[Triple, LaurentSeries] = {k: c for k, c in (terms or {}).items() if c}
        self.truncated = truncated or any(c.truncated for c in self.terms.values())

    @classmethod
    def antisymmetrize(cls, algebra: LieAlgebraSpec, raw: Mapping[Triple, LaurentSeries]) -> "TrivectorElement":
        """Project a g (x) g (x) g element onto sorted triples with weight 1."""
        out: Dict[Triple, LaurentSeries] = {}
        truncated = False
        for triple, c in raw.items():
            truncated = truncated or c.truncated
            if len(set(triple)) < 3:
                continue
            ordered = tuple(sorted(triple))
            sign = _permutation_sign(triple, ordered)
            value = c.scale(sign)
            out[ordered] = out[ordered] + value if ordered in out else value
        return cls(algebra, out, truncated)

    def __add__(self, other: "TrivectorElement") -> "TrivectorElement":
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError(f"{self.algebra.name} vs {other.algebra.name}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TrivectorElement(self.algebra, out, self.truncated or other.truncated)

    def scale(self, value) -> "TrivectorElement":
        return TrivectorElement(self.algebra, {k: c.scale(value) for k, c in self.terms.items()}, self.truncated)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrivectorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for triple in sorted(self.terms):
            name = "^".join(str(self.algebra.generators[p]) for p in triple)
            parts.append(f"({self.terms[triple].to_text()})*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TrivectorElement({self.to_text()})"


def _permutation_sign(source: Tuple[int, ...], target: Tuple[int, ...]) -> int:
    perm = [source.index(t) for t in target]
    sign = 1
    for a, b in itertools.combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            sign = -sign
    return sign


def build_rmatrix(name, indices: Mapping[str, int], order: int = DEFAULT_ORDER) -> RMatrix:
    """r = sum c X ^ Y for a catalog deformation; the twist exponent is i * r."""
    spec = get_spec(name)
    indices = validate_indices(spec.id, indices)
    return RMatrix.from_terms(build_poincare(), spec.terms(indices, order), order, spec.id.value)


def control_rmatrix(order: int = DEFAULT_ORDER) -> RMatrix:
    """P1 ^ M12, a bivector with a non-commuting carrier."""
    one = LaurentSeries.one(order)
    return RMatrix.from_terms(build_poincare(), [(one, ("P", (1,)), ("M", (1, 2)))], order, "control:P1^M12")


def _one_sided(r: RMatrix, s: RMatrix, raw: Dict[Triple, LaurentSeries]):
    """[r12, s13] + [r12, s23] + [r13, s23] accumulated into ``raw``."""
    algebra = r.algebra
    gens = algebra.generators
    position = algebra.position

    def add(key, value):
        raw[key] = raw[key] + value if key in raw else value

    for cr, a, b in r.tensor_form():
        for cs, c, d in s.tensor_form():
            coeff = cr * cs
            if not coeff:
                continue
            for g, z in algebra.bracket(gens[a], gens[c]).items():
                add((position(g), b, d), coeff.scale(z))
            for g, z in algebra.bracket(gens[b], gens[c]).items():
                add((a, position(g), d), coeff.scale(z))
            for g, z in algebra.bracket(gens[b], gens[d]).items():
                add((a, c, position(g)), coeff.scale(z))


def schouten_bracket(r: RMatrix, s: RMatrix) -> TrivectorElement:
    """[[r, s]] from leg embeddings, symmetrized in r and s and antisymmetrized onto triples."""
    if r.algebra is not s.algebra:
        raise AlgebraMismatchError(f"{r.algebra.name} vs {s.algebra.name}")
    raw: Dict[Triple, LaurentSeries] = {}
    _one_sided(r, s, raw)
    _one_sided(s, r, raw)
    return TrivectorElement.antisymmetrize(r.algebra, raw)


def check_cybe(r: RMatrix) -> CheckOutcome:
    residual = schouten_bracket(r, r)
    zero = residual.is_zero()
    logger.debug(f"CYBE for {r.name or r.to_text()}: {'zero' if zero else residual.to_text()}")
    return CheckOutcome(
        passed=zero,
        residual="" if zero else residual.to_text(),
        exact=zero and not residual.truncated,
        order=r.order,
        detail=f"[[r,r]] for r = {r.to_text()}",
    )


def commuting_pairs(algebra: Optional[LieAlgebraSpec] = None) -> List[Tuple[GeneratorId, GeneratorId]]:
    """Ordered pairs of distinct generators with vanishing bracket."""
    algebra = algebra or build_poincare()
    return [(a, b) for a, b in itertools.combinations(algebra.generators, 2) if not algebra.bracket(a, b)]


def abelian_rmatrices(algebra: Optional[LieAlgebraSpec] = None, order: int = DEFAULT_ORDER) -> List[RMatrix]:
    """One bivector X ^ Y per commuting pair; each must satisfy the CYBE."""
    algebra = algebra or build_poincare()
    one = LaurentSeries.one(order)
    return [
        RMatrix(algebra, {(algebra.position(a), algebra.position(b)): one}, order, f"{a}^{b}")
        for a, b in commuting_pairs(algebra)
    ]


def trivector_coefficient(t: TrivectorElement, a: GeneratorId, b: GeneratorId, c: GeneratorId) -> str:
    """Coefficient text of a ^ b ^ c, sign-adjusted for the argument order."""
    triple = tuple(t.algebra.position(g) for g in (a, b, c))
    if len(set(triple)) < 3:
        return "0"
    ordered = tuple(sorted(triple))
    coeff = t.terms.get(ordered)
    if coeff is None:
        return "0"
    return coeff.scale(_permutation_sign(ordered, triple)).to_text()
