"""Elements of the three value groups a surface valuation can take values in.

``RationalVal`` lives in an additive subgroup of Q, ``QuadVal`` in Z + Z*tau
for an irrational tau, ``LexVal`` in Z^2 ordered lexicographically. All three
are immutable and hashable so they can key series terms directly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from poincareseries.errors import MixedVariant


@dataclass(frozen=True)
class RationalVal:
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("RationalVal with zero denominator")
        reduced = Fraction(self.num, self.den)
        object.__setattr__(self, "num", reduced.numerator)
        object.__setattr__(self, "den", reduced.denominator)

    @classmethod
    def of(cls, value: Union[int, Fraction]) -> "RationalVal":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        return value_add(self, other)

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


@dataclass(frozen=True)
class QuadVal:
    """The element a + b*tau."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other):
        return value_add(self, other)

    def __str__(self) -> str:
        return f"{_fraction_text(self.a)}+{_fraction_text(self.b)}*tau"


@dataclass(frozen=True)
class LexVal:
    first: int
    second: int

    def __post_init__(self):
        for name in ("first", "second"):
            coordinate = getattr(self, name)
            if isinstance(coordinate, bool) or not isinstance(coordinate, int):
                raise TypeError(f"LexVal.{name} must be an integer, got {coordinate!r}")

    def __add__(self, other):
        return value_add(self, other)

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


Value = Union[RationalVal, QuadVal, LexVal]

def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def same_variant(a: Value, b: Value) -> bool:
    return type(a) is type(b)


def require_same_variant(a: Value, b: Value) -> None:
    if not same_variant(a, b):
        raise MixedVariant(a, b)


def zero_like(v: Value) -> Value:
    """The zero of ``v``'s value group."""
    if isinstance(v, RationalVal):
        return RationalVal(0)
    if isinstance(v, QuadVal):
        return QuadVal(0, 0)
    if isinstance(v, LexVal):
        return LexVal(0, 0)
    raise TypeError(f"not a value: {v!r}")


def value_add(a: Value, b: Value) -> Value:
    require_same_variant(a, b)
    if isinstance(a, RationalVal):
        return RationalVal.of(a.fraction + b.fraction)
    if isinstance(a, QuadVal):
        return QuadVal(a.a + b.a, a.b + b.b)
    return LexVal(a.first + b.first, a.second + b.second)


def value_scale(n: int, v: Value) -> Value:
    """The n-fold sum of ``v``; ``n = 0`` gives the zero of the group."""
    if n < 0:
        raise ValueError(f"scale factor must be nonnegative, got {n}")
    if isinstance(v, RationalVal):
        return RationalVal.of(n * v.fraction)
    if isinstance(v, QuadVal):
        return QuadVal(n * v.a, n * v.b)
    if isinstance(v, LexVal):
        return LexVal(n * v.first, n * v.second)
    raise TypeError(f"not a value: {v!r}")


def combine(alphas, betas) -> Value:
    """sum(alpha_i * beta_i) over aligned sequences; betas must be nonempty."""
    total = zero_like(betas[0])
    for alpha, beta in zip(alphas, betas):
        if alpha:
            total = value_add(total, value_scale(alpha, beta))
    return total
