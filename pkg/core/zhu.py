"""
Zhu-algebra side: the map F from the vacuum module into U(g), the adjoint
action on U(g), reduction modulo U(g)n+, the zero-weight polynomials P0
that cut out admissible highest weights, and xi-regraded weights.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator
from sympy.utilities.iterables import multiset_permutations

from core.affine import Element, Level, Mode, Monomial, PbwOrder, add_into, normal_order_terms
from core.audit import AuditLog
from core.config import get_settings
from core.errors import InvalidXiError, NonNegativeModeError, ZhuReductionError
from core.polyring import BiPoly, MonomialOrder, echelon_span, leading_form
from core.rationals import RationalLike, parse_rational
from core.singular import SingularSpec, find_singular
from core.superalgebra import Generator
from core.vacuum import State, weight_of

settings = get_settings()

Word = Tuple[Generator, ...]

NPLUS = frozenset({Generator.E1, Generator.E2, Generator.E12})
CARTAN = frozenset({Generator.H1, Generator.H2})


def _word_key(word: Word):
    return (-len(word), tuple(g.rank for g in reversed(word)))


class UgElement:
    """Element of U(g) in PBW form (f12 < f1 < f2 < h1 < h2 < e1 < e2 < e12)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[Generator], object]] = None):
        self.terms: Dict[Word, Fraction] = {}
        for word, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = tuple(Generator(g) for g in word)
                value = self.terms.get(key, 0) + c
                if value:
                    self.terms[key] = value
                else:
                    self.terms.pop(key, None)

    @classmethod
    def unit(cls, c=1) -> "UgElement":
        return cls({(): c})

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _word_key(kv[0])))

    def coefficient(self, word: Sequence[Generator]) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, UgElement) and self.terms == other.terms

    def __add__(self, other: "UgElement") -> "UgElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return UgElement(out)

    def __neg__(self) -> "UgElement":
        return self.scale(-1)

    def __sub__(self, other: "UgElement") -> "UgElement":
        return self + (-other)

    def scale(self, c) -> "UgElement":
        c = Fraction(c)
        return UgElement({w: c * v for w, v in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "UgElement(0)"
        body = " + ".join(f"{c}*" + "*".join(g.value for g in w) if w else f"{c}" for w, c in self.items())
        return f"UgElement({body})"


def _as_zero_modes(word: Sequence[Generator]) -> Monomial:
    return tuple(Mode(g, 0) for g in word)


def ug_normal_form(words: Mapping[Sequence[Generator], object]) -> UgElement:
    """PBW normal form in U(g) of a combination of arbitrary words."""
    # U(g) is the span of zero modes; their brackets carry no central term
    raw = {}
    for word, c in words.items():
        add_into(raw, {_as_zero_modes(word): Fraction(1)}, Fraction(c))
    ordered = normal_order_terms(raw, None, PbwOrder.MODE)
    return UgElement({tuple(m.gen for m in mono): c for mono, c in ordered.items()})


def ug_multiply(x: UgElement, y: UgElement) -> UgElement:
    product: Dict[Word, Fraction] = {}
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            product[wx + wy] = product.get(wx + wy, 0) + cx * cy
    return ug_normal_form(product)


def zhu_F(s: Union[State, Element]) -> UgElement:
    """
    a1(-n1-1)...am(-nm-1).1  ->  (-1)^(sum_{i<j}|ai||aj| + sum ni) am...a1
    """
    words: Dict[Word, Fraction] = {}
    for mono, c in s.terms.items():
        if any(m.n >= 0 for m in mono):
            raise NonNegativeModeError(f"F is defined on negative modes only; got {'*'.join(map(str, mono))}")
        odd = sum(1 for m in mono if m.odd)
        exponent = odd * (odd - 1) // 2 + sum(-m.n - 1 for m in mono)
        word = tuple(m.gen for m in reversed(mono))
        words[word] = words.get(word, 0) + (-c if exponent % 2 else c)
    return ug_normal_form(words)


def adjoint(x: Generator, u: UgElement) -> UgElement:
    """x_L u = [x, u], the super-derivation extension of the bracket."""
    words: Dict[Word, Fraction] = {}
    for w, c in u.terms.items():
        odd = sum(1 for g in w if g.parity) % 2
        swap = -1 if (x.parity and odd) else 1
        left, right = (x,) + w, w + (x,)
        words[left] = words.get(left, 0) + c
        words[right] = words.get(right, 0) - swap * c
    return ug_normal_form(words)


def adjoint_word(word: Sequence[Generator], u: UgElement) -> UgElement:
    """(x1 ... xr)_L u = x1_L(... xr_L u)."""
    for x in reversed(word):
        u = adjoint(x, u)
    return u


def reduce_mod_nplus(u: UgElement) -> Union[BiPoly, UgElement]:
    """
    Drop every PBW word that ends in n+. Survivors in S(h) come back as a
    BiPoly in (t1, t2) = (h1, h2); anything else stays a UgElement.
    """
    kept = {w: c for w, c in u.terms.items() if not any(g in NPLUS for g in w)}
    if all(g in CARTAN for w in kept for g in w):
        return BiPoly({(w.count(Generator.H1), w.count(Generator.H2)): c for w, c in kept.items()})
    return UgElement(kept)


def lowering_words(n: int) -> List[Word]:
    """All words in f1, f2, f12 of h-weight (-n, -n)."""
    words = []
    for c in range(n + 1):
        letters = [Generator.F1] * (n - c) + [Generator.F2] * (n - c) + [Generator.F12] * c
        words.extend(tuple(p) for p in multiset_permutations(letters))
    return sorted(words, key=lambda w: tuple(g.rank for g in w))


def p0_polynomials(level: Level, threads: Optional[int] = None, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> List[BiPoly]:
    """Reduced echelon basis of P0 at an admissible level."""
    m, _ = level.admissible_decomposition()
    states = find_singular(SingularSpec.for_level(level), threads)
    if not states:
        raise ZhuReductionError(f"no singular vector found at level {level}")

    words = lowering_words(m + 1)
    polys: List[BiPoly] = []
    for state in states:
        image = zhu_F(state)
        suffixes: Dict[Word, UgElement] = {(): image}

        def through(word: Word) -> UgElement:
            cached = suffixes.get(word)
            if cached is None:
                cached = adjoint(word[0], through(word[1:]))
                suffixes[word] = cached
            return cached

        with ThreadPoolExecutor(max_workers=threads or settings.THREADS) as pool:
            reduced = list(pool.map(lambda w: reduce_mod_nplus(through(w)), words))
        for word, r in zip(words, reduced):
            if not isinstance(r, BiPoly):
                raise ZhuReductionError(
                    f"({''.join(g.value for g in word)})_L F(v) does not reduce into S(h): {r!r}"
                )
            polys.append(r)

    basis = echelon_span(polys, order)
    AuditLog.log_event("P0_COMPUTED", {"level": str(level), "words": len(words), "dimension": len(basis)})
    return basis


def c2_polynomials(
    level: Level, threads: Optional[int] = None, p0: Optional[Sequence[BiPoly]] = None
) -> List[BiPoly]:
    """Top-degree parts of the P0 basis, echelonized; p0 skips recomputing the basis."""
    if p0 is None:
        p0 = p0_polynomials(level, threads)
    return echelon_span([leading_form(p) for p in p0])


class XiParam(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    xi: Fraction

    @field_validator("xi", mode="before")
    @classmethod
    def _in_open_unit_interval(cls, value):
        value = parse_rational(value)
        if not 0 < value < 1:
            raise ValueError(f"xi must satisfy 0 < xi < 1, got {value}")
        return value

    @classmethod
    def of(cls, value: RationalLike) -> "XiParam":
        try:
            return cls(xi=value)
        except ValidationError as e:
            raise InvalidXiError(e.errors()[0]["msg"]) from e


def xi_weight(mono: Monomial, xi: XiParam) -> Fraction:
    """degree - (xi/2)(w1 + w2)."""
    w = weight_of(mono)
    return w.degree - xi.xi / 2 * (w.w1 + w.w2)


def xi_weight_table(xi: XiParam) -> Dict[Generator, Fraction]:
    return {g: xi_weight((Mode(g, -1),), xi) for g in Generator}
