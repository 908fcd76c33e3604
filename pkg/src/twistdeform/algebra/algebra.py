"""Poincare and Galilei Lie algebras and their enveloping algebras in PBW form."""
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..series import (
    DEFAULT_ORDER,
    GaussianRational,
    LaurentSeries,
    ONE,
    ZERO,
    as_gaussian,
    gaussian,
)

METRIC: Tuple[int, int, int, int] = (-1, 1, 1, 1)

Word = Tuple[int, ...]


# Domain exceptions for deterministic error handling

class AlgebraMismatchError(Exception):
    pass


class UnknownGeneratorError(KeyError):
    pass


def eta(mu: int, nu: int) -> int:
    return METRIC[mu] if mu == nu else 0


def kron(a: int, b: int) -> int:
    return 1 if a == b else 0


@dataclass(frozen=True, order=True)
class GeneratorId:
    kind: str
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        return self.kind + "".join(str(i) for i in self.indices)


# kinds carrying an antisymmetric index pair
_PAIR_KINDS = {"M", "K"}

LinearCombination = Dict[GeneratorId, GaussianRational]


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    """Generators in PBW order plus a sparse bracket table on generator positions."""

    name: str
    generators: Tuple[GeneratorId, ...]
    table: Mapping[Tuple[int, int], Tuple[Tuple[int, GaussianRational], ...]]
    metric: Tuple[int, ...] = METRIC
    _positions: Dict[GeneratorId, int] = field(default_factory=dict, repr=False)
    _normal_forms: Dict[Word, Tuple[Tuple[Word, GaussianRational], ...]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._positions.update({g: n for n, g in enumerate(self.generators)})

    def __len__(self) -> int:
        return len(self.generators)

    def position(self, g: GeneratorId) -> int:
        try:
            return self._positions[g]
        except KeyError:
            raise UnknownGeneratorError(f"{g} is not a generator of {self.name}")

    def has(self, g: GeneratorId) -> bool:
        return g in self._positions

    def signed(self, kind: str, *indices: int) -> Optional[Tuple[int, GeneratorId]]:
        """Resolve possibly reversed index pairs: M21 -> (-1, M12); M11 -> None."""
        indices = tuple(indices)
        sign = 1
        if kind in _PAIR_KINDS:
            a, b = indices
            if a == b:
                return None
            if a > b:
                indices, sign = (b, a), -1
        g = GeneratorId(kind, indices)
        self.position(g)
        return sign, g

    def bracket(self, a: GeneratorId, b: GeneratorId) -> LinearCombination:
        pairs = self.table.get((self.position(a), self.position(b)), ())
        return {self.generators[n]: c for n, c in pairs}

    def bracket_combination(self, x: Mapping[GeneratorId, GaussianRational],
                            y: Mapping[GeneratorId, GaussianRational]) -> LinearCombination:
        out: LinearCombination = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for g, c in self.bracket(a, b).items():
                    out[g] = out.get(g, ZERO) + ca * cb * c
        return {g: c for g, c in out.items() if c}

    def normal_form(self, word: Word) -> Tuple[Tuple[Word, GaussianRational], ...]:
        """PBW normal form of a word of generator positions, memoised."""
        cached = self._normal_forms.get(word)
        if cached is not None:
            return cached
        result = _normalize(self, word, self.normal_form, None)
        self._normal_forms[word] = result
        return result

    def multiply_words(self, u: Word, v: Word) -> Tuple[Tuple[Word, GaussianRational], ...]:
        if not u or not v or u[-1] <= v[0]:
            return ((u + v, ONE),)
        return self.normal_form(u + v)

    def reordered(self, name: str, generators: Sequence[GeneratorId]) -> "LieAlgebraSpec":
        """Same brackets, different PBW order."""
        if sorted(generators) != sorted(self.generators):
            raise AlgebraMismatchError("reordering must permute the same generators")
        brackets = {(a, b): self.bracket(a, b) for a in generators for b in generators}
        return _spec_from_brackets(name, tuple(generators), brackets, self.metric)


def _normalize(algebra: LieAlgebraSpec, word: Word, recurse: Callable[[Word], Iterable],
               rng: Optional[random.Random]) -> Tuple[Tuple[Word, GaussianRational], ...]:
    descents = [j for j in range(len(word) - 1) if word[j] > word[j + 1]]
    if not descents:
        return ((word, ONE),)
    j = rng.choice(descents) if rng is not None else descents[0]
    a, b = word[j], word[j + 1]
    acc: Dict[Word, GaussianRational] = {}
    # ab = ba + [a, b]
    for w, c in recurse(word[:j] + (b, a) + word[j + 2:]):
        acc[w] = acc.get(w, ZERO) + c
    for g, c in algebra.table.get((a, b), ()):
        for w, c2 in recurse(word[:j] + (g,) + word[j + 2:]):
            acc[w] = acc.get(w, ZERO) + c * c2
    return tuple(sorted((w, c) for w, c in acc.items() if c))


def _spec_from_brackets(name: str, generators: Tuple[GeneratorId, ...],
                        brackets: Mapping[Tuple[GeneratorId, GeneratorId], LinearCombination],
                        metric: Tuple[int, ...] = METRIC) -> LieAlgebraSpec:
    position = {g: n for n, g in enumerate(generators)}
    table = {}
    for (a, b), combo in brackets.items():
        entries = tuple(sorted((position[g], as_gaussian(c)) for g, c in combo.items() if c))
        if entries:
            table[(position[a], position[b])] = entries
    return LieAlgebraSpec(name=name, generators=generators, table=table, metric=metric)


def _i_times(terms: Iterable[Tuple[int, Optional[Tuple[int, GeneratorId]]]]) -> LinearCombination:
    """i * sum(coeff * signed generator), dropping vanishing generators."""
    acc: Dict[GeneratorId, int] = {}
    for coeff, resolved in terms:
        if not coeff or resolved is None:
            continue
        sign, g = resolved
        acc[g] = acc.get(g, 0) + coeff * sign
    return {g: gaussian(0, v) for g, v in acc.items() if v}


@lru_cache(maxsize=None)
def build_poincare() -> LieAlgebraSpec:
    generators = tuple([GeneratorId("P", (mu,)) for mu in range(4)]
                       + [GeneratorId("M", (mu, nu)) for mu in range(4) for nu in range(mu + 1, 4)])

    def P(mu):
        return 1, GeneratorId("P", (mu,))

    def M(mu, nu):
        if mu == nu:
            return None
        return (1, GeneratorId("M", (mu, nu))) if mu < nu else (-1, GeneratorId("M", (nu, mu)))

    def rule(x: GeneratorId, y: GeneratorId) -> LinearCombination:
        if x.kind == "P" and y.kind == "P":
            return {}
        if x.kind == "M" and y.kind == "P":
            (mu, nu), (rho,) = x.indices, y.indices
            return _i_times([(eta(nu, rho), P(mu)), (-eta(mu, rho), P(nu))])
        if x.kind == "P" and y.kind == "M":
            return {g: -c for g, c in rule(y, x).items()}
        (mu, nu), (rho, sigma) = x.indices, y.indices
        return _i_times([
            (eta(mu, sigma), M(nu, rho)),
            (-eta(nu, sigma), M(mu, rho)),
            (eta(nu, rho), M(mu, sigma)),
            (-eta(mu, rho), M(nu, sigma)),
        ])

    brackets = {(a, b): rule(a, b) for a in generators for b in generators}
    return _spec_from_brackets("poincare", generators, brackets)


GALILEI_KINDS = ("Pi", "K", "V")


@lru_cache(maxsize=None)
def build_galilei() -> LieAlgebraSpec:
    generators = tuple([GeneratorId("Pi", (mu,)) for mu in range(4)]
                       + [GeneratorId("K", (a, b)) for a in range(1, 4) for b in range(a + 1, 4)]
                       + [GeneratorId("V", (a,)) for a in range(1, 4)])

    def Pi(mu):
        return 1, GeneratorId("Pi", (mu,))

    def V(a):
        return 1, GeneratorId("V", (a,))

    def K(a, b):
        if a == b:
            return None
        return (1, GeneratorId("K", (a, b))) if a < b else (-1, GeneratorId("K", (b, a)))

    def rule(x: GeneratorId, y: GeneratorId) -> LinearCombination:
        rank = GALILEI_KINDS.index
        if rank(x.kind) < rank(y.kind):
            return {g: -c for g, c in rule(y, x).items()}
        if x.kind == "K" and y.kind == "K":
            (a, b), (c, d) = x.indices, y.indices
            return _i_times([
                (kron(a, d), K(b, c)),
                (-kron(b, d), K(a, c)),
                (kron(b, c), K(a, d)),
                (-kron(a, c), K(b, d)),
            ])
        if x.kind == "K" and y.kind == "Pi":
            (a, b), (c,) = x.indices, y.indices
            if c == 0:
                return {}
            return _i_times([(kron(b, c), Pi(a)), (-kron(a, c), Pi(b))])
        if x.kind == "V" and y.kind == "K":
            # [V_c, K_ab] = -[K_ab, V_c]
            (c,), (a, b) = x.indices, y.indices
            return _i_times([(-kron(b, c), V(a)), (kron(a, c), V(b))])
        if x.kind == "V" and y.kind == "Pi":
            (a,), (mu,) = x.indices, y.indices
            return _i_times([(-1, Pi(a))]) if mu == 0 else {}
        return {}

    brackets = {(a, b): rule(a, b) for a in generators for b in generators}
    return _spec_from_brackets("galilei", generators, brackets)


def jacobi_violations(algebra: LieAlgebraSpec) -> List[Tuple[GeneratorId, GeneratorId, GeneratorId]]:
    """Generator triples whose cyclic double bracket does not vanish."""
    bad = []
    for x in algebra.generators:
        for y in algebra.generators:
            for z in algebra.generators:
                total: LinearCombination = {}
                for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                    inner = algebra.bracket(b, c)
                    for g, coeff in algebra.bracket_combination({a: ONE}, inner).items():
                        total[g] = total.get(g, ZERO) + coeff
                if any(total.values()):
                    bad.append((x, y, z))
    return bad


class UEAElement:
    """Element of the enveloping algebra: PBW words (tuples of generator positions) to series."""

    __slots__ = ("algebra", "terms", "order", "truncated")

    def __init__(self, algebra: LieAlgebraSpec, terms: Optional[Dict[Word, LaurentSeries]] = None,
                 order: int = DEFAULT_ORDER, truncated: bool = False):
        self.algebra = algebra
        self.terms = {w: c for w, c in (terms or {}).items() if c}
        self.order = order
        self.truncated = truncated or any(c.truncated for c in self.terms.values())

    # constructors

    @classmethod
    def zero(cls, algebra: LieAlgebraSpec, order: int = DEFAULT_ORDER) -> "UEAElement":
        return cls(algebra, {}, order)

    @classmethod
    def unit(cls, algebra: LieAlgebraSpec, order: int = DEFAULT_ORDER) -> "UEAElement":
        return cls(algebra, {(): LaurentSeries.one(order)}, order)

    @classmethod
    def scalar(cls, algebra: LieAlgebraSpec, value: LaurentSeries) -> "UEAElement":
        return cls(algebra, {(): value}, value.order)

    @classmethod
    def generator(cls, algebra: LieAlgebraSpec, kind: str, *indices: int,
                  order: int = DEFAULT_ORDER) -> "UEAElement":
        resolved = algebra.signed(kind, *indices)
        if resolved is None:
            return cls.zero(algebra, order)
        sign, g = resolved
        return cls(algebra, {(algebra.position(g),): LaurentSeries.constant(sign, order)}, order)

    @classmethod
    def of(cls, algebra: LieAlgebraSpec, g: GeneratorId, order: int = DEFAULT_ORDER) -> "UEAElement":
        return cls(algebra, {(algebra.position(g),): LaurentSeries.one(order)}, order)

    # arithmetic

    def _check(self, other: "UEAElement"):
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(f"{self.algebra.name} vs {other.algebra.name}")

    def __add__(self, other: "UEAElement") -> "UEAElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return UEAElement(self.algebra, out, self.order, self.truncated or other.truncated)

    def __neg__(self) -> "UEAElement":
        return UEAElement(self.algebra, {w: -c for w, c in self.terms.items()}, self.order, self.truncated)

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + (-other)

    def scale(self, value) -> "UEAElement":
        if isinstance(value, LaurentSeries):
            out = {w: c * value for w, c in self.terms.items()}
            return UEAElement(self.algebra, out, self.order, self.truncated or value.truncated)
        return UEAElement(self.algebra, {w: c.scale(value) for w, c in self.terms.items()}, self.order,
                          self.truncated)

    def __mul__(self, other) -> "UEAElement":
        if not isinstance(other, UEAElement):
            return self.scale(other)
        self._check(other)
        out: Dict[Word, LaurentSeries] = {}
        truncated = self.truncated or other.truncated
        multiply = self.algebra.multiply_words
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                coeff = c1 * c2
                truncated = truncated or coeff.truncated
                if not coeff:
                    continue
                for w, s in multiply(w1, w2):
                    _accumulate(out, w, coeff.scale(s))
        return UEAElement(self.algebra, out, self.order, truncated)

    def __rmul__(self, other) -> "UEAElement":
        return self.scale(other)

    def __pow__(self, power: int) -> "UEAElement":
        result = UEAElement.unit(self.algebra, self.order)
        for _ in range(power):
            result = result * self
        return result

    def commutator(self, other: "UEAElement") -> "UEAElement":
        return self * other - other * self

    # structure maps of the undeformed Hopf algebra

    def counit(self) -> LaurentSeries:
        return self.terms.get((), LaurentSeries.zero(self.order))

    def antipode0(self) -> "UEAElement":
        """S0 on PBW words: reverse and sign each letter, then renormalise."""
        out: Dict[Word, LaurentSeries] = {}
        for w, c in self.terms.items():
            sign = -1 if len(w) % 2 else 1
            for nw, s in self.algebra.normal_form(tuple(reversed(w))):
                _accumulate(out, nw, c.scale(s * sign))
        return UEAElement(self.algebra, out, self.order, self.truncated)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def min_degree(self) -> int:
        """Lowest parameter degree among the coefficients."""
        return min((c.min_degree() for c in self.terms.values()), default=0)

    def linear_part(self) -> Dict[GeneratorId, LaurentSeries]:
        return {self.algebra.generators[w[0]]: c for w, c in self.terms.items() if len(w) == 1}

    def map_coefficients(self, fn: Callable[[LaurentSeries], LaurentSeries]) -> "UEAElement":
        return UEAElement(self.algebra, {w: fn(c) for w, c in self.terms.items()}, self.order, self.truncated)

    def with_order(self, order: int) -> "UEAElement":
        return UEAElement(self.algebra, {w: c.with_order(order) for w, c in self.terms.items()}, order,
                          self.truncated)

    def word_text(self, word: Word) -> str:
        return word_text(self.algebra, word)

    def to_text(self) -> str:
        return _terms_text({(w,): c for w, c in self.terms.items()}, self.algebra)

    def __repr__(self) -> str:
        return f"UEAElement({self.to_text()})"


def _accumulate(out: Dict, key, value: LaurentSeries):
    prev = out.get(key)
    if prev is None:
        if value:
            out[key] = value
        return
    total = prev + value
    if total:
        out[key] = total
    else:
        del out[key]


def word_text(algebra: LieAlgebraSpec, word: Word) -> str:
    if not word:
        return "1"
    return "*".join(str(algebra.generators[n]) for n in word)


def _terms_text(terms: Mapping[Tuple[Word, ...], LaurentSeries], algebra: LieAlgebraSpec) -> str:
    """Canonical sorted rendering shared by UEA and tensor elements."""
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms):
        legs = " (x) ".join(word_text(algebra, w) for w in key)
        coeff = terms[key].to_text()
        if coeff == "1":
            parts.append(legs)
        elif coeff == "-1":
            parts.append(f"-{legs}")
        else:
            parts.append(f"({coeff})*{legs}")
    return " + ".join(parts).replace("+ -", "- ")


GeneratorLike = Union[GeneratorId, Tuple[str, Sequence[int]]]


def pbw_normalize(algebra: LieAlgebraSpec, word: Sequence[GeneratorLike], coefficient=None,
                  order: int = DEFAULT_ORDER, rng: Optional[random.Random] = None) -> UEAElement:
    """Rewrite a raw generator word into the PBW basis.

    Letters may carry reversed index pairs (``("M", (2, 1))``). With ``rng`` the
    out-of-order pair to swap is chosen at random at every step, bypassing the
    memo table; the canonical form must not depend on that choice.
    """
    if coefficient is None:
        coefficient = LaurentSeries.one(order)
    elif not isinstance(coefficient, LaurentSeries):
        coefficient = LaurentSeries.constant(coefficient, order)
    sign = 1
    letters: List[int] = []
    for letter in word:
        kind, indices = (letter.kind, letter.indices) if isinstance(letter, GeneratorId) else letter
        resolved = algebra.signed(kind, *indices)
        if resolved is None:
            return UEAElement.zero(algebra, order)
        s, g = resolved
        sign *= s
        letters.append(algebra.position(g))

    if rng is None:
        normal = algebra.normal_form(tuple(letters))
    else:
        def recurse(w):
            return _normalize(algebra, w, recurse, rng)
        normal = recurse(tuple(letters))
    out: Dict[Word, LaurentSeries] = {}
    for w, s in normal:
        _accumulate(out, w, coefficient.scale(s * sign))
    return UEAElement(algebra, out, order)


def uea_mul(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b


def uea_commutator(a: UEAElement, b: UEAElement) -> UEAElement:
    return a.commutator(b)
