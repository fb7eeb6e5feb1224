"""
Zhu-algebra computations: images under F, the P0 polynomials and
xi-regraded weights.
"""

from typing import Dict, Optional

from core.affine import Level
from core.errors import ZhuReductionError
from core.rationals import format_rational
from core.singular import SingularSpec, find_singular
from core.zhu import XiParam, c2_polynomials, p0_polynomials, xi_weight, xi_weight_table, zhu_F
from cli.expression import parse_expression, parse_state, render_bipoly, render_element, render_monomial, render_ug
from schemas.report import ug_to_terms
from tools.singular_vectors import load_state


def zhu_image(
    level: Level,
    in_path: Optional[str] = None,
    expr: Optional[str] = None,
    threads: Optional[int] = None,
) -> Dict:
    """
    F(v) in U(g) for a saved state, a text state, or the singular vector.

    Returns:
        Dict with the source state and its image as JSON terms and text
    """
    if in_path:
        state = load_state(in_path, level)
    elif expr:
        state = parse_state(expr, level)
    else:
        states = find_singular(SingularSpec.for_level(level), threads)
        if not states:
            raise ZhuReductionError(f"no singular vector at level {level}")
        state = states[0]

    image = zhu_F(state)
    return {
        "level": str(level),
        "state": render_element(state),
        "image": [t.model_dump(mode="json") for t in ug_to_terms(image)],
        "text": f"F({render_element(state)})\n  = {render_ug(image)}",
    }


def zhu_p0(level: Level, threads: Optional[int] = None) -> Dict:
    """
    Echelon basis of P0 and of its top-degree (C2) parts.
    """
    basis = p0_polynomials(level, threads)
    c2 = c2_polynomials(level, p0=basis)
    rendered = [render_bipoly(p) for p in basis]
    return {
        "level": str(level),
        "dimension": len(basis),
        "polynomials": rendered,
        "c2_polynomials": [render_bipoly(p) for p in c2],
        "text": "\n".join([f"P0 at level {level}: dimension {len(basis)}"] + [f"  p{i + 1} = {p}" for i, p in enumerate(rendered)]),
    }


def xi_weights(xi_value, expr: Optional[str] = None) -> Dict:
    """
    xi-regraded weights of the monomials in expr, or of every g(-1).1.

    Args:
        xi_value: 0 < xi < 1 as P/Q
        expr: Element text; each of its monomials is weighed
    """
    xi = XiParam.of(xi_value)
    if expr is None:
        table = {g.value: w for g, w in xi_weight_table(xi).items()}
        return {
            "xi": format_rational(xi.xi),
            "weights": {name: format_rational(w) for name, w in table.items()},
            "text": "\n".join(f"wt {name}(-1)1 = {format_rational(w)}" for name, w in table.items()),
        }

    element = parse_expression(expr)
    weights = {render_monomial(mono) or "1": xi_weight(mono, xi) for mono, _ in element.items()}
    return {
        "xi": format_rational(xi.xi),
        "weights": {name: format_rational(w) for name, w in weights.items()},
        "text": "\n".join(f"wt {name} = {format_rational(w)}" for name, w in weights.items()),
    }
