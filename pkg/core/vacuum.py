"""
Vacuum module V(k, C) induced from the trivial module.

States are combinations of canonical monomials in negative modes applied
to the vacuum. Every mode a(n) with n >= 0 kills the vacuum, zero modes
included, since all of sl(2|1) acts by zero on the trivial module.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Mapping, NamedTuple, Optional, Tuple

from core.affine import (
    ONE, Element, Level, Mode, Monomial, PbwOrder, Terms, add_into, insert,
    is_canonical, mode_bracket, monomial_sort_key, normal_order, normal_order_terms,
)
from core.audit import AuditLog
from core.errors import NonHomogeneousStateError, NonNegativeModeError
from core.superalgebra import Generator, hweight
from integrations.memo_cache import memo


class Weight(NamedTuple):
    w1: Fraction
    w2: Fraction
    degree: int

    def __str__(self) -> str:
        return f"({self.w1}, {self.w2}; {self.degree})"


class State:
    """Element of V(k, C); the trailing vacuum is implicit."""

    __slots__ = ("element", "level")

    def __init__(self, element: Element, level: Level):
        for mono in element.terms:
            if any(m.n >= 0 for m in mono):
                raise NonNegativeModeError(f"state monomial {'*'.join(map(str, mono))} has a mode with n >= 0")
            if not is_canonical(mono):
                raise ValueError(f"state monomial {'*'.join(map(str, mono))} is not in PBW form")
        self.element = element
        self.level = level

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, object], level: Level) -> "State":
        return cls(Element(terms), level)

    @property
    def terms(self) -> Terms:
        return self.element.terms

    def items(self):
        return self.element.items()

    def coefficient(self, mono) -> Fraction:
        return self.element.coefficient(mono)

    def scale(self, c) -> "State":
        return State(self.element.scale(c), self.level)

    def __add__(self, other: "State") -> "State":
        return State(self.element + other.element, self.level)

    def __sub__(self, other: "State") -> "State":
        return State(self.element - other.element, self.level)

    def __bool__(self) -> bool:
        return bool(self.element)

    def __len__(self) -> int:
        return len(self.element)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.element
        return isinstance(other, State) and self.level == other.level and self.element == other.element

    def __repr__(self) -> str:
        return f"State(level={self.level}, {self.element!r})"


def vacuum(level: Level) -> State:
    return State(Element.scalar(1), level)


def apply_to_vacuum(x: Element, level: Level) -> State:
    """x . 1 for an arbitrary word combination x."""
    ordered = normal_order(x, level)
    # after straightening, modes with n >= 0 sit rightmost and hit the vacuum
    kept = {mono: c for mono, c in ordered.terms.items() if all(m.n < 0 for m in mono)}
    return State(Element(kept), level)


def _annihilate(x: Mode, mono: Monomial, level: Level) -> Terms:
    """x(n) * mono * 1 for n >= 0."""
    if not mono:
        return {}
    key = ("act", level.k, x, mono)
    cached = memo.get(key)
    if cached is not None:
        return cached

    head, rest = mono[0], mono[1:]
    out: Terms = {}
    swap = -ONE if (x.odd and head.odd) else ONE
    for tail, c in _annihilate(x, rest, level).items():
        add_into(out, insert(head, tail, level.k), swap * c)
    for produced, c in mode_bracket(x, head, level).terms.items():
        if not produced:
            add_into(out, {rest: ONE}, c)
            continue
        y = produced[0]
        if y.n < 0:
            add_into(out, insert(y, rest, level.k), c)
        else:
            add_into(out, _annihilate(y, rest, level), c)

    memo.set(key, out)
    return out


def act_terms(m: Mode, terms: Mapping[Monomial, Fraction], level: Level) -> Terms:
    out: Terms = {}
    for mono, c in terms.items():
        if m.n < 0:
            add_into(out, insert(m, mono, level.k), c)
        else:
            add_into(out, _annihilate(m, mono, level), c)
    return out


def act(m: Mode, s: State) -> State:
    """Apply the mode m to the state s."""
    return State(Element(act_terms(m, s.terms, s.level)), s.level)


def act_element(x: Element, s: State) -> State:
    """Apply every word of x to s, rightmost mode first; () acts as a scalar."""
    out: Terms = {}
    for word, c in x.terms.items():
        partial = dict(s.terms)
        for m in reversed(word):
            partial = act_terms(m, partial, s.level)
        add_into(out, partial, c)
    return State(Element(out), s.level)


def weight_of(mono: Monomial) -> Weight:
    w1 = w2 = Fraction(0)
    for m in mono:
        c1, c2 = hweight(m.gen)
        w1 += c1
        w2 += c2
    return Weight(w1, w2, -sum(m.n for m in mono))


def homogeneous_weight(s: State) -> Weight:
    weights = {weight_of(mono) for mono in s.terms}
    if not weights:
        raise NonHomogeneousStateError("the zero state has no weight")
    if len(weights) > 1:
        listed = ", ".join(sorted(str(w) for w in weights))
        raise NonHomogeneousStateError(f"state mixes weights {listed}")
    return weights.pop()


@lru_cache(maxsize=None)
def _candidates(degree: int) -> Tuple[Mode, ...]:
    modes = [Mode(g, n) for n in range(-degree, 0) for g in Generator]
    return tuple(sorted(modes, key=PbwOrder.MODE.key))


def _extend(candidates, start, degree, w1, w2, prefix) -> Iterator[Monomial]:
    if degree == 0:
        if w1 == 0 and w2 == 0:
            yield prefix
        return
    # every mode moves each weight by at most 1 and costs at least one degree
    if abs(w1) > degree or abs(w2) > degree:
        return
    for idx in range(start, len(candidates)):
        mode = candidates[idx]
        if -mode.n > degree:
            continue
        c1, c2 = hweight(mode.gen)
        yield from _extend(
            candidates, idx + 1 if mode.odd else idx,
            degree + mode.n, w1 - c1, w2 - c2, prefix + (mode,),
        )


def weight_space_basis(level: Optional[Level], w: Weight) -> List[Monomial]:
    """All PBW monomials in negative modes with weight w, in canonical order."""
    if w.degree < 0:
        raise ValueError("weight degree must be nonnegative")
    found = list(_extend(_candidates(w.degree), 0, w.degree, Fraction(w.w1), Fraction(w.w2), ()))
    found.sort(key=monomial_sort_key)
    AuditLog.log_event("BASIS_ENUMERATED", {"weight": str(w), "size": len(found)})
    return found


def in_display_order(s: State) -> Element:
    """The state re-straightened with the generator-major PBW order."""
    return Element(normal_order_terms(s.terms, s.level.k, PbwOrder.GENERATOR))
