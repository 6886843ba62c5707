"""Text encodings of values, shared by spec files and CLI output.

    rational   "p/q" or "n"
    a + b*tau  "a+b*tau" with a, b rational encodings
    Z^2        "(m,n)"
"""

import re
from enum import Enum
from fractions import Fraction
from typing import Optional

from .values import LexVal, QuadVal, RationalVal, Value

_RATIONAL = r"-?\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^{_RATIONAL}$")
_QUAD_RE = re.compile(rf"^(?P<a>{_RATIONAL})\+(?P<b>{_RATIONAL})\*tau$")
_LEX_RE = re.compile(r"^\((?P<first>-?\d+),(?P<second>-?\d+)\)$")


class ValueKind(str, Enum):
    RATIONAL = "rational"
    QUAD = "quad"
    LEX = "lex"

    @classmethod
    def of(cls, v: Value) -> "ValueKind":
        if isinstance(v, RationalVal):
            return cls.RATIONAL
        if isinstance(v, QuadVal):
            return cls.QUAD
        return cls.LEX


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_value(text: str, kind: Optional[ValueKind] = None) -> Value:
    """Decode one value; with ``kind`` given, anything else is rejected."""
    text = text.strip().replace(" ", "")
    match = _QUAD_RE.match(text)
    if match:
        value: Value = QuadVal(parse_rational(match["a"]), parse_rational(match["b"]))
    elif (match := _LEX_RE.match(text)) is not None:
        value = LexVal(int(match["first"]), int(match["second"]))
    elif _RATIONAL_RE.match(text):
        value = RationalVal.of(parse_rational(text))
    else:
        raise ValueError(f"not a value encoding: {text!r}")
    if kind is not None and ValueKind.of(value) is not ValueKind(kind):
        raise ValueError(f"expected a {ValueKind(kind).value} value, got {text!r}")
    return value


def format_value(v: Value) -> str:
    return str(v)
