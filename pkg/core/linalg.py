"""
Exact sparse linear algebra over Q.

Rows are dicts {column: value}. Elimination is fraction-free: rows are
cleared to integers, combined by cross-multiplication and divided by
their content, so entries stay integral and small.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Mapping, Sequence

Row = Dict[int, int]


def _integral(row: Mapping[int, Fraction]) -> Row:
    entries = {c: Fraction(v) for c, v in row.items() if v}
    if not entries:
        return {}
    den = lcm(*(v.denominator for v in entries.values()))
    return _primitive({c: int(v * den) for c, v in entries.items()})


def _primitive(row: Row) -> Row:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def _cross_cancel(row: Row, pivot_row: Row, col: int) -> Row:
    """p*row - a*pivot_row, which clears column col."""
    a = row.get(col)
    if not a:
        return row
    p = pivot_row[col]
    out = {c: p * v for c, v in row.items()}
    for c, v in pivot_row.items():
        value = out.get(c, 0) - a * v
        if value:
            out[c] = value
        else:
            out.pop(c, None)
    return _primitive(out)


def echelon(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> Dict[int, Row]:
    """
    Fully reduced integer echelon form.

    Returns {pivot column: row}; each row is zero in every other pivot column.
    """
    pending = [r for r in (_integral(row) for row in rows) if r]
    pivots: Dict[int, Row] = {}
    for col in range(ncols):
        candidates = [i for i, r in enumerate(pending) if col in r]
        if not candidates:
            continue
        # smallest pivot keeps the cross products small
        best = min(candidates, key=lambda i: (abs(pending[i][col]), i))
        pivot_row = pending.pop(best)
        pending = [r for r in (_cross_cancel(r, pivot_row, col) for r in pending) if r]
        for c in list(pivots):
            pivots[c] = _cross_cancel(pivots[c], pivot_row, col)
        pivots[col] = pivot_row
    return pivots


def rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    return len(echelon(rows, ncols))


def rref(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[Dict[int, Fraction]]:
    """Reduced row echelon form with unit pivots, ordered by pivot column."""
    out = []
    for col, row in sorted(echelon(rows, ncols).items()):
        p = row[col]
        out.append({c: Fraction(v, p) for c, v in sorted(row.items())})
    return out


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    pivots = echelon(rows, ncols)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for col, row in pivots.items():
            if free in row:
                vector[col] = Fraction(-row[free], row[col])
        basis.append(vector)
    return basis


def primitive_integer(vector: Sequence[Fraction]) -> List[int]:
    """Smallest integer multiple with coprime entries (sign unchanged)."""
    nonzero = [Fraction(v) for v in vector if v]
    if not nonzero:
        return [0] * len(vector)
    den = lcm(*(v.denominator for v in nonzero))
    ints = [int(Fraction(v) * den) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]
