from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.polyring import MonomialOrder
from core.rationals import parse_rational

CommandName = Literal[
    "algebra-check",
    "singular-find",
    "singular-verify",
    "zhu-image",
    "zhu-p0",
    "xi-weight",
    "ideal-groebner",
    "ideal-dim",
    "classify",
    "admissible",
]

class Command(BaseModel):
    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        json_schema_extra={
            "example": {"name": "singular-find", "level": "-1/2", "json_output": True}
        },
    )

    name: CommandName
    level: Optional[Fraction] = Field(None, description="Level k as P/Q or an integer")
    xi: Optional[Fraction] = Field(None, description="Regrading parameter, 0 < xi < 1")
    degree: Optional[int] = Field(None, ge=0)
    w1: Optional[Fraction] = None
    w2: Optional[Fraction] = None
    in_path: Optional[str] = Field(None, description="Saved state JSON (--in)")
    expr: Optional[str] = Field(None, description="Element text (--expr)")
    gens_path: Optional[str] = Field(None, description="Generators file, one polynomial per line")
    order: MonomialOrder = MonomialOrder.DEGREVLEX
    threads: Optional[int] = Field(None, ge=1)
    out_path: Optional[str] = None
    json_output: bool = False

    @field_validator("level", "xi", "w1", "w2", mode="before")
    @classmethod
    def _rational(cls, value):
        return None if value is None else parse_rational(value)
