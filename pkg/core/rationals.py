import re
from fractions import Fraction
from typing import Union

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Exact rational from an int, a Fraction, or text of the form "P/Q" / "P"."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if not match:
            raise ValueError(f"malformed rational {value!r}; expected P/Q or an integer")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise ValueError(f"cannot read {type(value).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    # Fraction keeps lowest terms and prints integers without "/1"
    return str(Fraction(x))
