from fractions import Fraction
from pathlib import Path

from core.affine import Element

DATA = Path(__file__).parent / "data"

V1_TEXT = "2*e1(-1)*e2(-1)+2*h1(-1)*e12(-1)-2*h2(-1)*e12(-1)-e12(-2)"


def read_data(name: str) -> str:
    return (DATA / name).read_text(encoding="utf-8")


def proportional(x: Element, y: Element) -> bool:
    """x = c*y for some nonzero rational c."""
    if not x or not y or set(x.terms) != set(y.terms):
        return False
    mono = next(iter(x.terms))
    ratio = Fraction(x.terms[mono]) / y.terms[mono]
    return all(x.terms[m] == ratio * y.terms[m] for m in x.terms)
