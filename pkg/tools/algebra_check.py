"""
Self-check of the sl(2|1) structure derived from the supermatrices.
Runs super skew-symmetry, super Jacobi and form invariance over every
pair or triple of basis elements, plus nondegeneracy of the form.
"""

from itertools import product
from typing import Dict

from core.superalgebra import (
    Generator, GLinComb, bracket, bracket_lin, form, form_lin, gram_determinant, sign,
)
from core.rationals import format_rational


def super_jacobi(a: Generator, b: Generator, c: Generator) -> GLinComb:
    """
    (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]
    """
    A, B, C = GLinComb.of(a), GLinComb.of(b), GLinComb.of(c)
    return (
        bracket_lin(A, bracket(b, c)).scale(sign(a, c))
        + bracket_lin(B, bracket(c, a)).scale(sign(b, a))
        + bracket_lin(C, bracket(a, b)).scale(sign(c, b))
    )


def run_algebra_check() -> Dict:
    """
    Verify the structure identities exactly.

    Returns:
        Dict with per-identity counts checked/failed and the Gram determinant
    """
    basis = list(Generator)

    skew_failures = []
    for a, b in product(basis, repeat=2):
        if bracket(a, b) != bracket(b, a).scale(-sign(a, b)):
            skew_failures.append(f"{a.value},{b.value}")

    jacobi_failures = []
    invariance_failures = []
    for a, b, c in product(basis, repeat=3):
        if super_jacobi(a, b, c):
            jacobi_failures.append(f"{a.value},{b.value},{c.value}")
        if form_lin(bracket(a, b), GLinComb.of(c)) != form_lin(GLinComb.of(a), bracket(b, c)):
            invariance_failures.append(f"{a.value},{b.value},{c.value}")

    supersymmetry_failures = [
        f"{a.value},{b.value}" for a, b in product(basis, repeat=2)
        if form(a, b) != sign(a, b) * form(b, a)
    ]

    det = gram_determinant()
    failed = skew_failures or jacobi_failures or invariance_failures or supersymmetry_failures or not det
    return {
        "status": "error" if failed else "ok",
        "skew_symmetry": {"checked": len(basis) ** 2, "failed": skew_failures},
        "jacobi": {"checked": len(basis) ** 3, "failed": jacobi_failures},
        "invariance": {"checked": len(basis) ** 3, "failed": invariance_failures},
        "form_supersymmetry": {"checked": len(basis) ** 2, "failed": supersymmetry_failures},
        "gram_determinant": format_rational(det),
        "text": "\n".join([
            f"skew-symmetry: {len(basis) ** 2 - len(skew_failures)}/{len(basis) ** 2} pairs",
            f"super Jacobi:  {len(basis) ** 3 - len(jacobi_failures)}/{len(basis) ** 3} triples",
            f"invariance:    {len(basis) ** 3 - len(invariance_failures)}/{len(basis) ** 3} triples",
            f"Gram determinant: {format_rational(det)}",
        ]),
    }
