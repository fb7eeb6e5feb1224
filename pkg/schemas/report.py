from fractions import Fraction
from typing import Any, Dict, List, Literal, Tuple, Union

from pydantic import BaseModel, Field, computed_field

from core.affine import Element, Mode, PbwOrder
from core.rationals import format_rational, parse_rational
from core.superalgebra import Generator
from core.vacuum import State
from core.zhu import UgElement

Status = Literal["ok", "empty", "unsupported", "error"]

EXIT_CODES = {"ok": 0, "empty": 1, "unsupported": 1, "error": 2}

class ElementTerm(BaseModel):
    coeff: str = Field(..., description="Exact rational, p/q in lowest terms")
    modes: List[Tuple[str, int]] = Field(default_factory=list, description="[[gen, n], ...] left to right")

class UgTerm(BaseModel):
    coeff: str
    word: List[str] = Field(default_factory=list)

class SavedState(BaseModel):
    schema_version: int
    level: str
    state: List[ElementTerm]

class Report(BaseModel):
    status: Status
    payload: Dict[str, Any] = {}
    text: str = ""

    @computed_field
    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def element_to_terms(x: Union[Element, State], order: PbwOrder = PbwOrder.MODE) -> List[ElementTerm]:
    element = x.element if isinstance(x, State) else x
    return [
        ElementTerm(coeff=format_rational(c), modes=[(m.gen.value, m.n) for m in mono])
        for mono, c in element.items(order)
    ]


def terms_to_element(terms: List[ElementTerm]) -> Element:
    out: Dict[tuple, Fraction] = {}
    for term in terms:
        word = tuple(Mode(Generator(g), n) for g, n in term.modes)
        out[word] = out.get(word, 0) + parse_rational(term.coeff)
    return Element(out)


def ug_to_terms(u: UgElement) -> List[UgTerm]:
    return [UgTerm(coeff=format_rational(c), word=[g.value for g in w]) for w, c in u.items()]
