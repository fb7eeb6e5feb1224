"""
Text forms for elements, states, U(g) elements and bivariate polynomials.

Element grammar (terms joined by + / -, whitespace ignored):

    term ::= rational? ('*'? mode ('^' integer)?)+  |  rational
    mode ::= genname '(' integer ')'

h+ and h- expand to h1 + h2 and h1 - h2. A bare rational is a multiple of
the empty monomial (the vacuum for states, the unit in U(g)). U(g) words
use the same grammar with bare generator names: 27/128*e12^3*h1.
"""

import re
from fractions import Fraction
from tokenize import TokenError
from typing import List, Optional, Sequence, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from core.affine import Element, Level, Mode, Monomial, PbwOrder, normal_order
from core.errors import ExpressionSyntaxError, UnknownGeneratorError
from core.polyring import T1_SYMBOL, T2_SYMBOL, BiPoly, MonomialOrder
from core.rationals import format_rational
from core.superalgebra import GENERATOR_NAMES, H_MINUS, H_PLUS, Generator, GLinComb
from core.vacuum import State, apply_to_vacuum
from core.zhu import UgElement, ug_normal_form

_VALID = ", ".join(GENERATOR_NAMES + ("h+", "h-"))
_BY_LENGTH = sorted(GENERATOR_NAMES, key=len, reverse=True)
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DIGITS = re.compile(r"\d+")
_BIPOLY_CHARS = re.compile(r"^[\s0-9t+\-*/^()]*$")

Factor = Tuple[GLinComb, Optional[int]]


class _Parser:
    def __init__(self, src: str, words: bool):
        self.src = src
        self.pos = 0
        self.words = words

    def fail(self, message: str, pos: Optional[int] = None):
        raise ExpressionSyntaxError(message, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            found = self.peek() or "end of input"
            self.fail(f"expected {ch!r}, found {found!r}")

    def digits(self) -> Optional[int]:
        self.skip()
        match = _DIGITS.match(self.src, self.pos)
        if not match:
            return None
        self.pos = match.end()
        return int(match.group())

    def integer(self) -> int:
        negative = self.eat("-")
        if not negative:
            self.eat("+")
        value = self.digits()
        if value is None:
            self.fail("expected an integer")
        return -value if negative else value

    def rational(self) -> Optional[Fraction]:
        num = self.digits()
        if num is None:
            return None
        if self.eat("/"):
            den = self.digits()
            if not den:
                self.fail("expected a nonzero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def generator(self) -> GLinComb:
        self.skip()
        start = self.pos
        if self.words:
            for name in _BY_LENGTH:
                if self.src.startswith(name, start):
                    self.pos = start + len(name)
                    return GLinComb.of(Generator(name))
        else:
            if self.src.startswith("h", start) and self.src[start + 1:start + 2] in ("+", "-"):
                self.pos = start + 2
                return H_PLUS if self.src[start + 1] == "+" else H_MINUS
            match = _IDENTIFIER.match(self.src, start)
            if match and match.group() in GENERATOR_NAMES:
                self.pos = match.end()
                return GLinComb.of(Generator(match.group()))
        match = _IDENTIFIER.match(self.src, start)
        name = match.group() if match else self.src[start:start + 1]
        raise UnknownGeneratorError(f"unknown generator {name!r}; valid names are {_VALID}", start)

    def factor(self) -> List[Factor]:
        gen = self.generator()
        n = None
        if not self.words:
            self.expect("(")
            n = self.integer()
            self.expect(")")
        power = 1
        if self.eat("^"):
            at = self.pos
            power = self.digits()
            if not power:
                self.fail("expected a positive exponent", at)
        return [(gen, n)] * power

    def term(self) -> Tuple[Fraction, List[Factor]]:
        start = self.pos
        coeff = self.rational()
        factors: List[Factor] = []
        while True:
            starred = self.eat("*")
            ch = self.peek()
            if ch.isalpha() or ch == "_":
                factors.extend(self.factor())
            elif starred:
                self.fail("expected a generator after '*'")
            else:
                break
        if coeff is None and not factors:
            self.fail("expected a term", start if self.pos == start else None)
        return (Fraction(1) if coeff is None else coeff), factors

    def parse(self) -> List[Tuple[Fraction, List[Factor]]]:
        if not self.src.strip():
            self.fail("empty input", 0)
        terms = []
        sign = -1 if self.eat("-") else 1
        if sign == 1:
            self.eat("+")
        while True:
            coeff, factors = self.term()
            terms.append((sign * coeff, factors))
            if self.eat("+"):
                sign = 1
            elif self.eat("-"):
                sign = -1
            elif self.peek():
                self.fail(f"unexpected {self.peek()!r}")
            else:
                return terms


def _expand(terms: Sequence[Tuple[Fraction, List[Factor]]]):
    """Multiply out the sugar combinations factor by factor."""
    out = {}
    for coeff, factors in terms:
        partial = [((), coeff)]
        for gen, n in factors:
            partial = [
                (word + ((g,) if n is None else (Mode(g, n),)), c * cg)
                for word, c in partial for g, cg in gen
            ]
        for word, c in partial:
            out[word] = out.get(word, 0) + c
    return out


def parse_terms(src: str) -> Element:
    """Raw words, not straightened."""
    return Element(_expand(_Parser(src, words=False).parse()))


def parse_expression(src: str, level: Optional[Level] = None, order: PbwOrder = PbwOrder.MODE) -> Element:
    return normal_order(parse_terms(src), level, order)


def parse_state(src: str, level: Level) -> State:
    """The expression applied to the vacuum of V(k, C)."""
    return apply_to_vacuum(parse_terms(src), level)


def parse_ug_expression(src: str) -> UgElement:
    return ug_normal_form(_expand(_Parser(src, words=True).parse()))


def parse_bipoly(src: str) -> BiPoly:
    if not src.strip():
        raise ExpressionSyntaxError("empty input", 0)
    if not _BIPOLY_CHARS.match(src):
        bad = next(i for i, ch in enumerate(src) if not _BIPOLY_CHARS.match(ch))
        raise ExpressionSyntaxError(f"unexpected {src[bad]!r} in polynomial", bad)
    try:
        expr = parse_expr(
            src,
            local_dict={"t1": T1_SYMBOL, "t2": T2_SYMBOL},
            transformations=standard_transformations + (convert_xor,),
        )
        poly = sympy.Poly(expr, T1_SYMBOL, T2_SYMBOL, domain=sympy.QQ)
    except (SyntaxError, TokenError, TypeError, ValueError, BasePolynomialError, sympy.SympifyError) as e:
        raise ExpressionSyntaxError(f"not a polynomial in t1, t2: {e}") from e
    return BiPoly.from_sympy(poly)


def parse_bipoly_lines(text: str) -> List[BiPoly]:
    """One polynomial per nonblank line; '#' starts a comment. A bare CR is whitespace."""
    polys = []
    for number, line in enumerate(text.replace("\r", " ").split("\n"), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            polys.append(parse_bipoly(line))
        except ExpressionSyntaxError as e:
            raise ExpressionSyntaxError(f"line {number}: {e.message}", e.position) from e
    return polys


def _join(parts: Sequence[Tuple[Fraction, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for i, (c, body) in enumerate(parts):
        magnitude = abs(c)
        if not body:
            text = format_rational(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{format_rational(magnitude)}*{body}"
        if i == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f"{'-' if c < 0 else '+'} {text}")
    return " ".join(out)


def _powers(symbols: Sequence[str]) -> str:
    chunks = []
    for s in symbols:
        if chunks and chunks[-1][0] == s:
            chunks[-1][1] += 1
        else:
            chunks.append([s, 1])
    return "*".join(s if p == 1 else f"{s}^{p}" for s, p in chunks)


def render_monomial(mono: Monomial) -> str:
    return _powers([str(m) for m in mono])


def render_element(x: Union[Element, State], order: PbwOrder = PbwOrder.MODE) -> str:
    element = x.element if isinstance(x, State) else x
    return _join([(c, render_monomial(mono)) for mono, c in element.items(order)])


def render_ug(u: UgElement) -> str:
    return _join([(c, _powers([g.value for g in word])) for word, c in u.items()])


def render_bipoly(p: BiPoly, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> str:
    parts = []
    for (d1, d2), c in p.items(order):
        symbols = ["t1"] * d1 + ["t2"] * d2
        parts.append((c, _powers(symbols)))
    return _join(parts)


def render_point(point: Tuple[Fraction, Fraction]) -> str:
    return f"({format_rational(point[0])}, {format_rational(point[1])})"


def render_line(line: Tuple[Fraction, Fraction, Fraction]) -> str:
    """a*t1 + b*t2 + c = 0 written as a*t1 + b*t2 = -c."""
    a, b, c = line
    return f"{render_bipoly(BiPoly({(1, 0): a, (0, 1): b}))} = {format_rational(-c)}"


def render_lambda(point: Tuple[Fraction, Fraction]) -> str:
    """The weight as a combination of the fundamental weights."""
    parts = [(c, name) for c, name in zip(point, ("Λ1", "Λ2")) if c]
    return _join(parts)
