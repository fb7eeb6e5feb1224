"""
Bivariate polynomials over Q in t1, t2.

Groebner bases by Buchberger's algorithm with the coprime and chain
criteria, quotient dimensions from standard monomials, and the small
variety computations behind the weight classification.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy

from core.affine import Level
from core.audit import AuditLog
from core.errors import AlgebraConsistencyError, UnsupportedSystemError
from core.linalg import rref

Exponent = Tuple[int, int]
Point = Tuple[Fraction, Fraction]
Line = Tuple[Fraction, Fraction, Fraction]

T1_SYMBOL, T2_SYMBOL = sympy.symbols("t1 t2")


class MonomialOrder(str, Enum):
    """Term orders with t1 > t2."""

    DEGREVLEX = "degrevlex"
    LEX = "lex"

    def key(self, exp: Exponent) -> Tuple[int, int]:
        if self is MonomialOrder.DEGREVLEX:
            # with two variables, ties in degree go to the smaller power of t2
            return (exp[0] + exp[1], exp[0])
        return exp


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exponent, object]] = None):
        self.terms: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = (int(exp[0]), int(exp[1]))
                value = self.terms.get(key, 0) + c
                if value:
                    self.terms[key] = value
                else:
                    self.terms.pop(key, None)

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, d1: int, d2: int, c=1) -> "BiPoly":
        return cls({(d1, d2): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == BiPoly.constant(other).terms
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return self.scale(-1)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scale(other)
        out: Dict[Exponent, Fraction] = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                e = (a1 + b1, a2 + b2)
                out[e] = out.get(e, 0) + ca * cb
        return BiPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "BiPoly":
        c = Fraction(c)
        return BiPoly({e: c * v for e, v in self.terms.items()})

    def shift(self, exp: Exponent, c) -> "BiPoly":
        """c * t1^exp[0] * t2^exp[1] * self"""
        c = Fraction(c)
        return BiPoly({(e[0] + exp[0], e[1] + exp[1]): c * v for e, v in self.terms.items()})

    def items(self, order: "MonomialOrder" = MonomialOrder.DEGREVLEX) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms from the largest monomial down."""
        return iter(sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True))

    def total_degree(self) -> int:
        return max((e[0] + e[1] for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def leading_monomial(self, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> Exponent:
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> "BiPoly":
        return self.scale(1 / self.leading_coefficient(order))

    def evaluate(self, t1, t2) -> Fraction:
        t1, t2 = Fraction(t1), Fraction(t2)
        return sum((c * t1 ** e[0] * t2 ** e[1] for e, c in self.terms.items()), Fraction(0))

    def to_sympy(self) -> sympy.Poly:
        data = {e: sympy.Rational(c.numerator, c.denominator) for e, c in self.terms.items()}
        return sympy.Poly.from_dict(data or {(0, 0): 0}, T1_SYMBOL, T2_SYMBOL, domain=sympy.QQ)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "BiPoly":
        out = {}
        for exp, c in poly.as_dict(native=False).items():
            c = sympy.Rational(c)
            out[exp] = Fraction(int(c.p), int(c.q))
        return cls(out)

    def __repr__(self) -> str:
        return f"BiPoly({self.to_sympy().as_expr()})"


T1 = BiPoly.monomial(1, 0)
T2 = BiPoly.monomial(0, 1)


@dataclass(frozen=True)
class QuotientDim:
    finite: bool
    count: Optional[int] = None

    @classmethod
    def Finite(cls, n: int) -> "QuotientDim":
        return cls(True, n)

    @classmethod
    def Infinite(cls) -> "QuotientDim":
        return cls(False, None)

    def __str__(self) -> str:
        return f"finite({self.count})" if self.finite else "infinite"


def _divides(a: Exponent, b: Exponent) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return (max(a[0], b[0]), max(a[1], b[1]))


def leading_form(p: BiPoly) -> BiPoly:
    """Homogeneous component of top total degree."""
    top = p.total_degree()
    return BiPoly({e: c for e, c in p.terms.items() if e[0] + e[1] == top})


def s_polynomial(f: BiPoly, g: BiPoly, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> BiPoly:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = _lcm(lf, lg)
    return (f.shift((l[0] - lf[0], l[1] - lf[1]), 1 / f.terms[lf])
            - g.shift((l[0] - lg[0], l[1] - lg[1]), 1 / g.terms[lg]))


def normal_form(p: BiPoly, basis: Sequence[BiPoly], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> BiPoly:
    """Fully reduced remainder of p modulo basis."""
    leads = [(g.leading_monomial(order), g) for g in basis if g]
    work = dict(p.terms)
    remainder: Dict[Exponent, Fraction] = {}
    while work:
        lt = max(work, key=order.key)
        c = work[lt]
        for lm, g in leads:
            if _divides(lm, lt):
                factor = c / g.terms[lm]
                shift = (lt[0] - lm[0], lt[1] - lm[1])
                for e, v in g.terms.items():
                    key = (e[0] + shift[0], e[1] + shift[1])
                    value = work.get(key, 0) - factor * v
                    if value:
                        work[key] = value
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[lt] = c
            del work[lt]
    return BiPoly(remainder)


def _chain_criterion(i: int, j: int, leads: List[Exponent], pending: set) -> bool:
    l = _lcm(leads[i], leads[j])
    for k, lk in enumerate(leads):
        if k in (i, j) or not _divides(lk, l):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduce_basis(basis: List[BiPoly], order: MonomialOrder) -> List[BiPoly]:
    minimal: List[BiPoly] = []
    for idx, g in enumerate(basis):
        lg = g.leading_monomial(order)
        redundant = False
        for jdx, h in enumerate(basis):
            if jdx == idx:
                continue
            lh = h.leading_monomial(order)
            # of two equal leading monomials keep the earlier one
            if _divides(lh, lg) and (lh != lg or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(g.monic(order))
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lm = g.leading_monomial(order)
        tail = BiPoly({e: c for e, c in g.terms.items() if e != lm})
        reduced.append(BiPoly.monomial(*lm) + normal_form(tail, others, order))
    return sorted(reduced, key=lambda p: order.key(p.leading_monomial(order)), reverse=True)


def groebner(gens: Sequence[BiPoly], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> List[BiPoly]:
    """Reduced, monic Groebner basis sorted by leading monomial (largest first)."""
    basis = [g.monic(order) for g in gens if g]
    if not basis:
        raise ValueError("groebner needs at least one nonzero generator")
    leads = [g.leading_monomial(order) for g in basis]
    pending = {(i, j) for j in range(len(basis)) for i in range(j)}
    reductions = 0

    while pending:
        # normal selection strategy: smallest lcm first
        i, j = min(pending, key=lambda p: (order.key(_lcm(leads[p[0]], leads[p[1]])), p))
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        if li[0] * lj[0] == 0 and li[1] * lj[1] == 0:
            continue  # coprime leading monomials
        if _chain_criterion(i, j, leads, pending):
            continue
        reductions += 1
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r.monic(order))
            leads.append(r.leading_monomial(order))
            new = len(basis) - 1
            pending.update((k, new) for k in range(new))

    result = _reduce_basis(basis, order)
    AuditLog.log_event("GROEBNER_DONE", {
        "order": order.value, "generators": len(gens), "reductions": reductions, "basis": len(result)
    })
    return result


def ideal_contains(gens: Sequence[BiPoly], p: BiPoly, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> bool:
    return not normal_form(p, groebner(gens, order), order)


def _pure_powers(leads: Sequence[Exponent]) -> Tuple[Optional[int], Optional[int]]:
    a = min((e[0] for e in leads if e[1] == 0 and e[0] > 0), default=None)
    b = min((e[1] for e in leads if e[0] == 0 and e[1] > 0), default=None)
    return a, b


def standard_monomials(basis: Sequence[BiPoly], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> List[Exponent]:
    """Monomials divisible by no leading monomial; the basis must be Groebner and zero-dimensional."""
    leads = [g.leading_monomial(order) for g in basis]
    if (0, 0) in leads:
        return []
    a, b = _pure_powers(leads)
    if a is None or b is None:
        raise UnsupportedSystemError("the quotient is infinite-dimensional")
    found = [(i, j) for i in range(a) for j in range(b) if not any(_divides(l, (i, j)) for l in leads)]
    return sorted(found, key=order.key)


def quotient_dim(gens: Sequence[BiPoly], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> QuotientDim:
    basis = groebner(gens, order)
    leads = [g.leading_monomial(order) for g in basis]
    if (0, 0) in leads:
        return QuotientDim.Finite(0)
    a, b = _pure_powers(leads)
    if a is None or b is None:
        return QuotientDim.Infinite()
    return QuotientDim.Finite(len(standard_monomials(basis, order)))


def echelon_span(polys: Sequence[BiPoly], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> List[BiPoly]:
    """Reduced row-echelon basis of the Q-span, monic, largest leading monomial first."""
    monomials = sorted({e for p in polys for e in p.terms}, key=order.key, reverse=True)
    column = {e: i for i, e in enumerate(monomials)}
    rows = [{column[e]: c for e, c in p.terms.items()} for p in polys]
    return [BiPoly({monomials[i]: c for i, c in row.items()}) for row in rref(rows, len(monomials))]


def linear_factors(p: BiPoly) -> List[Line]:
    """
    Distinct factors a*t1 + b*t2 + c of p over Q.

    Raises UnsupportedSystemError when an irreducible factor has degree >= 2.
    """
    _, factors = p.to_sympy().factor_list()
    out = []
    for factor, _multiplicity in factors:
        f = BiPoly.from_sympy(factor)
        if f.total_degree() >= 2:
            raise UnsupportedSystemError(f"{f!r} has an irreducible factor of degree {f.total_degree()} over Q")
        line = (f.terms.get((1, 0), Fraction(0)), f.terms.get((0, 1), Fraction(0)), f.terms.get((0, 0), Fraction(0)))
        if line not in out:
            out.append(line)
    return out


def _intersect(lines: Sequence[Line]) -> Optional[Point]:
    rows = [{0: a, 1: b, 2: c} for a, b, c in lines]
    reduced = rref(rows, 3)
    pivots = [min(row) for row in reduced]
    if 2 in pivots:
        return None  # parallel distinct lines
    if pivots != [0, 1]:
        raise UnsupportedSystemError("the common zero set contains a line")
    return (-reduced[0].get(2, Fraction(0)), -reduced[1].get(2, Fraction(0)))


def solve_factored(gens: Sequence[BiPoly]) -> List[Point]:
    """Common zeros of generators that split into linear factors over Q."""
    factor_lists = []
    for g in gens:
        if not g:
            continue
        if g.is_constant():
            return []
        factor_lists.append(linear_factors(g))
    if not factor_lists:
        raise UnsupportedSystemError("the zero ideal vanishes on the whole plane")

    points = set()
    for choice in product(*factor_lists):
        point = _intersect(choice)
        if point is not None:
            points.add(point)
    for point in points:
        if any(g.evaluate(*point) for g in gens):
            raise AlgebraConsistencyError(f"{point} does not annihilate every generator")
    return sorted(points)


@dataclass(frozen=True)
class Variety:
    """Rational zero set: whole lines a*t1 + b*t2 + c = 0 and the points off them."""

    lines: Tuple[Line, ...]
    points: Tuple[Point, ...]


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _to_rational(x) -> sympy.Rational:
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def _normalize_line(line: Line) -> Line:
    lead = next(v for v in line if v)
    return tuple(v / lead for v in line)


def _rational_roots(p: sympy.Poly) -> List[Fraction]:
    roots = []
    for factor, _multiplicity in p.factor_list()[1]:
        if factor.degree() > 1:
            raise UnsupportedSystemError(f"{factor.as_expr()} has irrational zeros")
        a, b = factor.all_coeffs()
        roots.append(-_to_fraction(b) / _to_fraction(a))
    return sorted(set(roots))


def _isolated_points(gens: Sequence[BiPoly]) -> List[Point]:
    """Rational common zeros of coprime generators, read off a lex basis."""
    basis = groebner(gens, MonomialOrder.LEX)
    if basis == [BiPoly.constant(1)]:
        return []
    eliminant = basis[-1]
    if any(e[0] for e in eliminant.terms):
        raise UnsupportedSystemError("the common zero set is not finite")

    points = []
    for y in _rational_roots(sympy.Poly(eliminant.to_sympy().as_expr(), T2_SYMBOL, domain=sympy.QQ)):
        restricted = [
            sympy.Poly(g.to_sympy().as_expr().subs(T2_SYMBOL, _to_rational(y)), T1_SYMBOL, domain=sympy.QQ)
            for g in basis
        ]
        nonzero = [r for r in restricted if not r.is_zero]
        if not nonzero:
            raise UnsupportedSystemError(f"the common zero set contains the line t2 = {y}")
        common = reduce(lambda a, b: a.gcd(b), nonzero)
        points.extend((x, y) for x in _rational_roots(common))
    return points


def solve_variety(gens: Sequence[BiPoly]) -> Variety:
    """
    Common zeros of generators that may share linear factors.

    The common factor of the generators contributes whole lines; the
    cofactors, having no common factor, meet in finitely many points, and
    only those off the lines are kept.

    Raises UnsupportedSystemError when the common factor has a component of
    degree >= 2 or a cofactor zero is irrational.
    """
    polys = [g.to_sympy() for g in gens if g]
    if not polys:
        raise UnsupportedSystemError("the zero ideal vanishes on the whole plane")
    common = reduce(lambda a, b: a.gcd(b), polys)
    lines = []
    if common.total_degree() > 0:
        lines = [_normalize_line(line) for line in linear_factors(BiPoly.from_sympy(common))]
    cofactors = [BiPoly.from_sympy(p.exquo(common)) for p in polys]

    points = sorted(
        pt for pt in set(_isolated_points(cofactors))
        if not any(a * pt[0] + b * pt[1] + c == 0 for a, b, c in lines)
    )
    for point in points:
        if any(g.evaluate(*point) for g in gens):
            raise AlgebraConsistencyError(f"{point} does not annihilate every generator")
    AuditLog.log_event("VARIETY_SOLVED", {"lines": len(lines), "points": len(points)})
    return Variety(tuple(sorted(lines)), tuple(points))


def is_ordinary(point: Point) -> bool:
    """lambda(h+) = lambda(h1) + lambda(h2) is a nonnegative integer."""
    total = Fraction(point[0]) + Fraction(point[1])
    return total.denominator == 1 and total >= 0


def ordinary_lines(lines: Sequence[Line]) -> List[Line]:
    """Lines t1 + t2 = c with c a nonnegative integer, on which every weight is ordinary."""
    out = []
    for a, b, c in lines:
        if a and a == b and is_ordinary((-Fraction(c) / a, 0)):
            out.append((a, b, c))
    return out


def verify_on_line(p: BiPoly, a, b, c, d) -> bool:
    """True iff p(a + b*s, c + d*s) is the zero polynomial in s."""
    s = sympy.Symbol("s")
    line = {
        T1_SYMBOL: _to_rational(a) + _to_rational(b) * s,
        T2_SYMBOL: _to_rational(c) + _to_rational(d) * s,
    }
    return sympy.Poly(p.to_sympy().as_expr().subs(line), s, domain=sympy.QQ).is_zero


def admissible_weights(level: Level) -> List[Point]:
    """
    (lambda(h1), lambda(h2)) over both admissible families at the level:

        -k1(k+1), -k2(k+1)   with k0 + k1 + k2 = M - 1, all ki >= 0
         k1(k+1),  k2(k+1)   with k0 + k1 + k2 = M + 1, 1 <= k1, k2 <= M - 1, k1 + k2 <= M
    """
    _, M = level.admissible_decomposition()
    step = level.k + 1
    points = set()
    for k1 in range(M):
        for k2 in range(M - k1):
            points.add((-k1 * step, -k2 * step))
    for k1 in range(1, M):
        for k2 in range(1, M):
            if k1 + k2 <= M:
                points.add((k1 * step, k2 * step))
    return sorted(points)
