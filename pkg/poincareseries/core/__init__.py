from .values import (
    LexVal,
    QuadVal,
    RationalVal,
    Value,
    combine,
    value_add,
    value_scale,
    zero_like,
)
from .ordering import (
    UNDECIDABLE,
    Ordering,
    TauOracle,
    Undecidable,
    is_positive,
    rational_vs_tau,
    sort_values,
    value_cmp,
    value_le,
    value_lt,
)
from .continued_fractions import CFConvention, convergents
from .encoding import ValueKind, format_value, parse_value

__all__ = [
    # Value groups
    "RationalVal",
    "QuadVal",
    "LexVal",
    "Value",
    "value_add",
    "value_scale",
    "combine",
    "zero_like",
    # Ordering
    "Ordering",
    "Undecidable",
    "UNDECIDABLE",
    "TauOracle",
    "rational_vs_tau",
    "value_cmp",
    "value_le",
    "value_lt",
    "is_positive",
    "sort_values",
    # Continued fractions
    "CFConvention",
    "convergents",
    # Encodings
    "ValueKind",
    "format_value",
    "parse_value",
]
