"""
Highest-weight classification: zeros of P0 against the admissible list,
with the ordinary modules (lambda(h+) a nonnegative integer) marked.
"""

from typing import Dict, List, Optional

from core.affine import Level
from core.errors import UnsupportedSystemError
from core.polyring import (
    Line, Point, admissible_weights, is_ordinary, ordinary_lines, solve_factored, solve_variety,
)
from core.zhu import p0_polynomials
from cli.expression import render_bipoly, render_lambda, render_line, render_point


def admissible_list(level: Level) -> Dict:
    """
    (lambda(h1), lambda(h2)) of the admissible weights at a level.
    """
    m, M = level.admissible_decomposition()
    points = admissible_weights(level)
    return {
        "level": str(level),
        "m": m,
        "M": M,
        "weights": [render_point(p) for p in points],
        "ordinary": [render_point(p) for p in points if is_ordinary(p)],
        "text": "\n".join(
            [f"admissible weights at level {level} (m={m}, M={M}):"]
            + [_point_line(p) for p in points]
        ),
    }


def _point_line(p: Point) -> str:
    mark = "  [ordinary]" if is_ordinary(p) else ""
    return f"  {render_point(p)}  {render_lambda(p)}{mark}"


def classify_level(level: Level, threads: Optional[int] = None) -> Dict:
    """
    Solve P0 and compare its isolated zeros with the admissible weights.

    When the P0 generators share linear factors, those lines are reported as
    one-parameter families and only the points off them are compared.

    Returns:
        Dict with both lists, the families, the ordinary sub-lists and a
        match flag; status error on mismatch, unsupported when the zero set
        is out of reach of the solvers
    """
    polys = p0_polynomials(level, threads)
    admissible = admissible_weights(level)
    payload = {
        "level": str(level),
        "p0": [render_bipoly(p) for p in polys],
        "admissible": [render_point(p) for p in admissible],
    }
    lines: List[Line] = []
    try:
        solved = solve_factored(polys)
    except UnsupportedSystemError:
        try:
            variety = solve_variety(polys)
        except UnsupportedSystemError as e:
            payload.update({
                "status": "unsupported",
                "reason": str(e),
                "text": f"P0 at level {level} is outside the solvers: {e}",
            })
            return payload
        solved, lines = list(variety.points), list(variety.lines)

    match = set(solved) == set(admissible)
    ordinary_families = ordinary_lines(lines)
    payload.update({
        "status": "ok" if match else "error",
        "weights": [render_point(p) for p in solved],
        "families": [render_line(line) for line in lines],
        "match": match,
        "ordinary": [render_point(p) for p in solved if is_ordinary(p)],
        "ordinary_families": [render_line(line) for line in ordinary_families],
    })
    text = [f"highest weights at level {level} ({'match' if match else 'MISMATCH with'} admissible list):"]
    text += [_point_line(p) for p in solved]
    if lines:
        text.append("one-parameter families:")
        text += [
            f"  {render_line(line)}{'  [ordinary]' if line in ordinary_families else ''}" for line in lines
        ]
    payload["text"] = "\n".join(text)
    return payload
