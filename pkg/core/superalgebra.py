"""
sl(2|1) in its 3x3 supermatrix realization.

The matrices below are the single source of truth: the bracket and the
invariant form are derived from them once and cached. Row/column 3 is the
odd index, so the supertrace is m11 + m22 - m33.
"""

from enum import Enum, IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Optional, Tuple

import sympy

from core.errors import AlgebraConsistencyError


class Parity(IntEnum):
    EVEN = 0
    ODD = 1


def _unit(i: int, j: int, sign: int = 1) -> sympy.Matrix:
    m = sympy.zeros(3, 3)
    m[i - 1, j - 1] = sign
    return m


_MATRICES = {
    "f12": _unit(2, 1),
    "f1": _unit(3, 1),
    "f2": _unit(2, 3, -1),
    "h1": sympy.diag(1, 0, 1),
    "h2": sympy.diag(0, -1, -1),
    "e1": _unit(1, 3),
    "e2": _unit(3, 2),
    "e12": _unit(1, 2),
}


class Generator(str, Enum):
    """Basis of sl(2|1). Declaration order is the PBW order."""

    F12 = "f12"
    F1 = "f1"
    F2 = "f2"
    H1 = "h1"
    H2 = "h2"
    E1 = "e1"
    E2 = "e2"
    E12 = "e12"

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self in _ODD else Parity.EVEN

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def matrix(self) -> sympy.Matrix:
        return _MATRICES[self.value].copy()

    def __str__(self) -> str:
        return self.value


_ODD = frozenset({Generator.E1, Generator.E2, Generator.F1, Generator.F2})
_RANK = {g: i for i, g in enumerate(Generator)}

GENERATOR_NAMES = tuple(g.value for g in Generator)

# alpha_1 and alpha_2 evaluated on (h1, h2)
ALPHA1 = (Fraction(0), Fraction(1))
ALPHA2 = (Fraction(1), Fraction(0))


def supertrace(m: sympy.Matrix) -> sympy.Rational:
    return m[0, 0] + m[1, 1] - m[2, 2]


def sign(a: Generator, b: Generator) -> int:
    """(-1)^{|a||b|}"""
    return -1 if a.parity and b.parity else 1


class GLinComb:
    """Sparse linear combination of generators with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Generator, object]] = None):
        self.terms: Dict[Generator, Fraction] = {}
        for g, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[Generator(g)] = c

    @classmethod
    def of(cls, g: Generator) -> "GLinComb":
        return cls({g: 1})

    def __iter__(self) -> Iterator[Tuple[Generator, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].rank))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, GLinComb) and self.terms == other.terms

    def __add__(self, other: "GLinComb") -> "GLinComb":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GLinComb(out)

    def __neg__(self) -> "GLinComb":
        return self.scale(-1)

    def __sub__(self, other: "GLinComb") -> "GLinComb":
        return self + (-other)

    def scale(self, c) -> "GLinComb":
        c = Fraction(c)
        return GLinComb({g: c * v for g, v in self.terms.items()})

    def coefficient(self, g: Generator) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{g.value}" for g, c in self)


H_PLUS = GLinComb({Generator.H1: 1, Generator.H2: 1})
H_MINUS = GLinComb({Generator.H1: 1, Generator.H2: -1})


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


@lru_cache(maxsize=None)
def _tables() -> Tuple[Dict[Tuple[Generator, Generator], GLinComb], Dict[Tuple[Generator, Generator], Fraction]]:
    basis = list(Generator)
    columns = sympy.Matrix.hstack(*[g.matrix.reshape(9, 1) for g in basis])
    left_inverse = (columns.T * columns).inv() * columns.T

    for g in basis:
        if supertrace(g.matrix) != 0:
            raise AlgebraConsistencyError(f"{g.value} is not supertraceless")

    brackets = {}
    forms = {}
    for a in basis:
        for b in basis:
            ma, mb = a.matrix, b.matrix
            comm = ma * mb - sign(a, b) * mb * ma
            flat = comm.reshape(9, 1)
            coeffs = left_inverse * flat
            if columns * coeffs != flat:
                raise AlgebraConsistencyError(f"[{a.value},{b.value}] leaves the span of the basis")
            brackets[(a, b)] = GLinComb({g: _to_fraction(c) for g, c in zip(basis, coeffs)})
            forms[(a, b)] = _to_fraction(supertrace(ma * mb))
    return brackets, forms


def bracket(a: Generator, b: Generator) -> GLinComb:
    """Supercommutator ab - (-1)^{|a||b|} ba in the generator basis."""
    return _tables()[0][(a, b)]


def form(a: Generator, b: Generator) -> Fraction:
    """Invariant form str(ab)."""
    return _tables()[1][(a, b)]


def bracket_lin(x: GLinComb, y: GLinComb) -> GLinComb:
    out = GLinComb()
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            out = out + bracket(a, b).scale(ca * cb)
    return out


def form_lin(x: GLinComb, y: GLinComb) -> Fraction:
    return sum((ca * cb * form(a, b) for a, ca in x.terms.items() for b, cb in y.terms.items()), Fraction(0))


def hweight(a: Generator) -> Tuple[Fraction, Fraction]:
    """Adjoint eigenvalues (c1, c2) with [h1, a] = c1 a and [h2, a] = c2 a."""
    if a in (Generator.H1, Generator.H2):
        return Fraction(0), Fraction(0)
    out = []
    for h in (Generator.H1, Generator.H2):
        image = bracket(h, a)
        if set(image.terms) - {a}:
            raise AlgebraConsistencyError(f"{a.value} is not an ad(h) eigenvector")
        out.append(image.coefficient(a))
    return out[0], out[1]


def gram_determinant() -> Fraction:
    basis = list(Generator)
    gram = sympy.Matrix([[_to_sympy(form(a, b)) for b in basis] for a in basis])
    return _to_fraction(gram.det())


def _to_sympy(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)
