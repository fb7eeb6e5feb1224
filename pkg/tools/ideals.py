"""
Groebner bases and quotient dimensions for generator files.
"""

from typing import Dict, List

from core.errors import StateFileError
from core.polyring import BiPoly, MonomialOrder, groebner, quotient_dim, standard_monomials
from cli.expression import parse_bipoly_lines, render_bipoly


def read_generators(path: str) -> List[BiPoly]:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise StateFileError(f"cannot read generators file {path}: {e}") from e
    gens = parse_bipoly_lines(text)
    if not gens:
        raise ValueError(f"{path} contains no polynomials")
    return gens


def groebner_basis(gens_path: str, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> Dict:
    """
    Reduced Groebner basis of the ideal in a generators file.
    """
    gens = read_generators(gens_path)
    basis = groebner(gens, order)
    rendered = [render_bipoly(g, order) for g in basis]
    return {
        "order": order.value,
        "generators": len(gens),
        "basis": rendered,
        "text": "\n".join([f"reduced Groebner basis ({order.value}):"] + [f"  {g}" for g in rendered]),
    }


def ideal_dimension(gens_path: str, order: MonomialOrder = MonomialOrder.DEGREVLEX) -> Dict:
    """
    dim Q[t1,t2]/<gens>, with the standard monomials when finite.
    """
    gens = read_generators(gens_path)
    dim = quotient_dim(gens, order)
    payload = {
        "order": order.value,
        "finite": dim.finite,
        "dimension": dim.count if dim.finite else "infinite",
        "text": f"dim Q[t1,t2]/I = {dim.count if dim.finite else 'infinite'}",
    }
    if dim.finite:
        monomials = standard_monomials(groebner(gens, order), order)
        payload["standard_monomials"] = [render_bipoly(BiPoly.monomial(*e)) for e in monomials]
    return payload
