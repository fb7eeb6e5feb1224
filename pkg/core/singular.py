"""
Singular vectors of the vacuum module.

A state is singular when e1(0), e2(0) and f12(1) all kill it. Candidates
at a weight are found as the exact nullspace of the stacked action
matrices of those three modes on the weight space.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.affine import Element, Level, Mode, Monomial, mode_bracket, monomial_sort_key
from core.audit import AuditLog
from core.config import get_settings
from core.errors import NonHomogeneousStateError
from core.linalg import nullspace, primitive_integer
from core.superalgebra import ALPHA1, ALPHA2, Generator
from core.vacuum import State, Weight, act, act_terms, homogeneous_weight, weight_space_basis

settings = get_settings()


def raising_set() -> List[Mode]:
    return [Mode(Generator.E1, 0), Mode(Generator.E2, 0), Mode(Generator.F12, 1)]


def reflected_vacuum_weight(level: Level) -> Dict[str, Fraction]:
    """
    Coordinates of the shifted reflection of k*Lambda0 in the singular
    direction: k*Lambda0 - (m+1)(M*delta - theta), theta = alpha1 + alpha2.
    """
    m, M = level.admissible_decomposition()
    return {
        "Lambda0": level.k,
        "delta": Fraction(-(m + 1) * M),
        "alpha1": Fraction(m + 1),
        "alpha2": Fraction(m + 1),
    }


def singular_weight(level: Level) -> Weight:
    """Weight of the singular vector generating the maximal submodule."""
    coords = reflected_vacuum_weight(level)
    w1 = coords["alpha1"] * ALPHA1[0] + coords["alpha2"] * ALPHA2[0]
    w2 = coords["alpha1"] * ALPHA1[1] + coords["alpha2"] * ALPHA2[1]
    return Weight(w1, w2, int(-coords["delta"]))


@dataclass(frozen=True)
class SingularSpec:
    level: Level
    target: Weight

    @classmethod
    def for_level(cls, level: Level, target: Optional[Weight] = None) -> "SingularSpec":
        level.admissible_decomposition()
        return cls(level=level, target=target or singular_weight(level))


def bracket_closure(depth: int = 3, level: Optional[Level] = None) -> List[Element]:
    """Single-mode elements reached by iterated brackets of the raising set."""
    seen: Dict[Tuple, Element] = {}

    def remember(x: Element) -> bool:
        items = list(x.items())
        lead = items[0][1]
        key = tuple((mono, c / lead) for mono, c in items)
        if key in seen:
            return False
        seen[key] = x
        return True

    frontier = [Element.word(r) for r in raising_set()]
    for x in frontier:
        remember(x)
    for _ in range(depth):
        current = list(seen.values())
        produced = []
        for x in current:
            for y in current:
                z = _bracket_elements(x, y, level)
                if z and all(mono for mono in z.terms) and remember(z):
                    produced.append(z)
        if not produced:
            break
    return list(seen.values())


def _bracket_elements(x: Element, y: Element, level: Optional[Level]) -> Element:
    out = Element()
    for (mx,), cx in x.terms.items():
        for (my,), cy in y.terms.items():
            out = out + mode_bracket(mx, my, level).scale(cx * cy)
    return out


def verify_singular(s: State) -> bool:
    homogeneous_weight(s)
    return all(not act(r, s) for r in raising_set())


def _column(level: Level, mono: Monomial) -> List[Dict[Monomial, Fraction]]:
    return [act_terms(r, {mono: Fraction(1)}, level) for r in raising_set()]


def action_rows(level: Level, basis: Sequence[Monomial], threads: Optional[int] = None) -> List[Dict[int, Fraction]]:
    """Stacked matrices of the raising modes on the span of basis, as sparse rows."""
    workers = threads or settings.THREADS
    with ThreadPoolExecutor(max_workers=workers) as pool:
        columns = list(pool.map(lambda mono: _column(level, mono), basis))

    entries: Dict[Tuple[int, Monomial], Dict[int, Fraction]] = {}
    for j, images in enumerate(columns):
        for r, image in enumerate(images):
            for mono, c in image.items():
                entries.setdefault((r, mono), {})[j] = c
    order = sorted(entries, key=lambda key: (key[0], monomial_sort_key(key[1])))
    return [entries[key] for key in order]


def find_singular(spec: SingularSpec, threads: Optional[int] = None) -> List[State]:
    """Basis of the singular states at spec.target, primitive and sign-normalized."""
    basis = weight_space_basis(spec.level, spec.target)
    if not basis:
        return []
    rows = action_rows(spec.level, basis, threads)
    AuditLog.log_event("ACTION_MATRIX_ASSEMBLED", {
        "weight": str(spec.target), "columns": len(basis), "rows": len(rows)
    })
    kernel = nullspace(rows, len(basis))
    AuditLog.log_event("NULLSPACE_COMPUTED", {"weight": str(spec.target), "dimension": len(kernel)})

    states = []
    for vector in kernel:
        ints = primitive_integer(vector)
        last = max(j for j, v in enumerate(ints) if v)
        if ints[last] < 0:
            ints = [-v for v in ints]
        states.append(State.from_terms({basis[j]: v for j, v in enumerate(ints) if v}, spec.level))
    AuditLog.log_event("SINGULAR_FOUND", {"level": str(spec.level), "count": len(states)})
    return states
