from enum import Enum
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, PositiveInt, StrictBool, StrictInt, StrictStr, field_validator


class CFConventionName(str, Enum):
    PLUS = "plus"
    HJ = "hj"


def _decimal(value: Union[int, str]) -> int:
    if isinstance(value, str):
        text = value.strip()
        if not text.lstrip("-").isdigit():
            raise ValueError(f"not a decimal integer: {value!r}")
        return int(text)
    return value


class ClassificationBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rank: StrictInt
    rational_rank: StrictInt
    dimension: StrictInt
    discrete: StrictBool


class SpecDocument(BaseModel):
    """One valuation spec file. Numbers are JSON integers or decimal strings, never floats."""

    model_config = ConfigDict(extra="forbid")

    type: Literal["0", "1", "2", "3", "4.1", "4.2"]
    g: Optional[Union[StrictInt, StrictStr]] = None
    betas: List[Union[StrictStr, StrictInt]]
    qs: Optional[List[Union[StrictInt, StrictStr]]] = None
    tau: Optional[List[PositiveInt]] = None
    tail_nonzero: Optional[StrictBool] = None
    next_beta_lower_bound: Optional[Union[StrictStr, StrictInt]] = None
    pieces: Optional[List[List[PositiveInt]]] = None
    cf_convention: Optional[CFConventionName] = None
    classification: Optional[ClassificationBlock] = None

    @field_validator("g", mode="after")
    @classmethod
    def _g_decimal(cls, v):
        return None if v is None else _decimal(v)

    @field_validator("qs", mode="after")
    @classmethod
    def _qs_decimal(cls, v):
        return None if v is None else [_decimal(q) for q in v]

    @field_validator("betas", mode="after")
    @classmethod
    def _betas_text(cls, v):
        return [str(b) for b in v]

    @field_validator("next_beta_lower_bound", mode="after")
    @classmethod
    def _bound_text(cls, v):
        return None if v is None else str(v)

    @field_validator("tau", mode="before")
    @classmethod
    def _tau_ints(cls, v):
        if v is None:
            return v
        return [_decimal(a) if isinstance(a, str) else a for a in v]
