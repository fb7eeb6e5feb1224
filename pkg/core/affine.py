"""
Affinization of sl(2|1): modes a(n), the bracket at a fixed level, and
PBW straightening in the level-k quotient of the enveloping superalgebra.

    [a(m), b(n)] = [a, b](m + n) + m * delta(m + n, 0) * (a, b) * k

The central element never appears in a monomial; it is replaced by the
level when a bracket produces it.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from core.errors import LevelRequiredError, NotAdmissibleError
from core.rationals import RationalLike, parse_rational
from core.superalgebra import Generator, bracket, form
from integrations.memo_cache import memo

ONE = Fraction(1)
HALF = Fraction(1, 2)


class Mode(NamedTuple):
    gen: Generator
    n: int

    @property
    def odd(self) -> bool:
        return bool(self.gen.parity)

    def __str__(self) -> str:
        return f"{self.gen.value}({self.n})"


Monomial = Tuple[Mode, ...]
Terms = Dict[Monomial, Fraction]


class PbwOrder(str, Enum):
    """Total orders on modes used for straightening."""

    MODE = "mode"            # n ascending, then generator order
    GENERATOR = "generator"  # generator order, then n ascending

    def key(self, m: Mode) -> Tuple[int, int]:
        if self is PbwOrder.MODE:
            return (m.n, m.gen.rank)
        return (m.gen.rank, m.n)


class Level(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: Fraction

    @field_validator("k", mode="before")
    @classmethod
    def _parse(cls, value):
        return parse_rational(value)

    @classmethod
    def of(cls, value: "RationalLike | Level") -> "Level":
        return value if isinstance(value, Level) else cls(k=value)

    def admissible_decomposition(self) -> Tuple[int, int]:
        """(m, M) with k + 1 = (m + 1)/M in lowest terms."""
        shifted = self.k + 1
        if shifted <= 0:
            raise NotAdmissibleError(
                f"level {self.k} is not admissible: k+1 = {shifted} is not (m+1)/M with m >= 0, M >= 1"
            )
        return shifted.numerator - 1, shifted.denominator

    def __str__(self) -> str:
        return str(self.k)


def _k(level: Optional[Level]) -> Optional[Fraction]:
    return None if level is None else level.k


def monomial_sort_key(mono: Monomial, order: PbwOrder = PbwOrder.MODE):
    """Longer monomials first, then by mode keys read from the right."""
    return (-len(mono), tuple(order.key(m) for m in reversed(mono)))


def degree_of(mono: Iterable[Mode]) -> int:
    return sum(m.n for m in mono)


def parity_of(mono: Iterable[Mode]) -> int:
    return sum(1 for m in mono if m.odd) % 2


def is_canonical(mono: Monomial, order: PbwOrder = PbwOrder.MODE) -> bool:
    for left, right in zip(mono, mono[1:]):
        kl, kr = order.key(left), order.key(right)
        if kl > kr or (kl == kr and left.odd):
            return False
    return True


def add_into(target: Terms, source: Mapping[Monomial, Fraction], scale: Fraction = ONE):
    if not scale:
        return
    for mono, c in source.items():
        value = target.get(mono, 0) + scale * c
        if value:
            target[mono] = value
        else:
            target.pop(mono, None)


class Element:
    """
    Sparse combination of mode monomials with exact coefficients.

    Elements built from raw words may hold non-canonical monomials until
    passed through normal_order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        self.terms: Terms = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = tuple(Mode(Generator(g), int(n)) for g, n in mono)
                self.terms[key] = self.terms.get(key, 0) + c
                if not self.terms[key]:
                    del self.terms[key]

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls({(): c})

    @classmethod
    def word(cls, *modes: Mode, coeff=1) -> "Element":
        return cls({tuple(modes): coeff})

    def items(self, order: PbwOrder = PbwOrder.MODE) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: monomial_sort_key(kv[0], order)))

    def coefficient(self, mono: Iterable[Mode]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        add_into(out, other.terms)
        return Element(out)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        c = Fraction(c)
        return Element({m: c * v for m, v in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "Element(0)"
        body = " + ".join(f"{c}*" + "*".join(map(str, m)) if m else f"{c}" for m, c in self.items())
        return f"Element({body})"


def _central(a: Mode, b: Mode, k: Optional[Fraction]) -> Fraction:
    if a.n + b.n != 0 or a.n == 0:
        return Fraction(0)
    value = a.n * form(a.gen, b.gen)
    if not value:
        return Fraction(0)
    if k is None:
        raise LevelRequiredError(f"[{a}, {b}] has a central term; a level is required")
    return value * k


def mode_bracket(a: Mode, b: Mode, level: Optional[Level] = None) -> Element:
    """[a(m), b(n)] as an element of length <= 1."""
    terms: Terms = {}
    for g, c in bracket(a.gen, b.gen):
        terms[(Mode(g, a.n + b.n),)] = c
    central = _central(a, b, _k(level))
    if central:
        terms[()] = central
    return Element(terms)


def _bracket_then(a: Mode, b: Mode, rest: Monomial, k: Optional[Fraction], order: PbwOrder) -> Terms:
    """[a, b] * rest, normal ordered."""
    out: Terms = {}
    for g, c in bracket(a.gen, b.gen):
        add_into(out, insert(Mode(g, a.n + b.n), rest, k, order), c)
    central = _central(a, b, k)
    if central:
        add_into(out, {rest: ONE}, central)
    return out


def insert(x: Mode, mono: Monomial, k: Optional[Fraction], order: PbwOrder = PbwOrder.MODE) -> Terms:
    """
    Normal form of x * mono for a canonical monomial mono.

    The returned mapping is shared through the memo table and must not be
    mutated by callers.
    """
    if not mono:
        return {(x,): ONE}
    key = ("insert", order, k, x, mono)
    cached = memo.get(key)
    if cached is not None:
        return cached

    head, rest = mono[0], mono[1:]
    kx, kh = order.key(x), order.key(head)
    if kx < kh or (kx == kh and not x.odd):
        result = {(x,) + mono: ONE}
    elif kx == kh:
        # odd square: x x = 1/2 [x, x]
        result = {}
        add_into(result, _bracket_then(x, x, rest, k, order), HALF)
    else:
        result = {}
        swap = -ONE if (x.odd and head.odd) else ONE
        for tail, c in insert(x, rest, k, order).items():
            add_into(result, insert(head, tail, k, order), swap * c)
        add_into(result, _bracket_then(x, head, rest, k, order))

    memo.set(key, result)
    return result


def normal_order_terms(terms: Mapping[Monomial, Fraction], k: Optional[Fraction], order: PbwOrder = PbwOrder.MODE) -> Terms:
    out: Terms = {}
    for word, c in terms.items():
        partial: Terms = {(): ONE}
        for mode in reversed(word):
            step: Terms = {}
            for mono, cm in partial.items():
                add_into(step, insert(mode, mono, k, order), cm)
            partial = step
        add_into(out, partial, c)
    return out


def normal_order(x: Element, level: Optional[Level] = None, order: PbwOrder = PbwOrder.MODE) -> Element:
    """Canonical PBW form of x in the level-k quotient."""
    return Element(normal_order_terms(x.terms, _k(level), order))


def multiply(x: Element, y: Element, level: Optional[Level] = None, order: PbwOrder = PbwOrder.MODE) -> Element:
    product: Terms = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            add_into(product, {mx + my: ONE}, cx * cy)
    return normal_order(Element(product), level, order)


def supercommutator(a: Mode, b: Mode, level: Optional[Level] = None, order: PbwOrder = PbwOrder.MODE) -> Element:
    """normal_order(a b - (-1)^{|a||b|} b a); equals mode_bracket(a, b)."""
    swap = -1 if (a.odd and b.odd) else 1
    return normal_order(Element({(a, b): 1, (b, a): -swap}) if a != b else Element({(a, b): 1 - swap}), level, order)
