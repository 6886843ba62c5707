"""Total orders on the value groups, including exact comparison against tau.

Elements a + b*tau can only be ordered relative to some knowledge of tau.
Here tau is a finite continued-fraction prefix; every comparison is decided
exactly from its convergents or reported as undecidable.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from poincareseries.errors import EmptyPrefix, InsufficientPrecision
from .continued_fractions import convergent_fractions
from .values import LexVal, QuadVal, RationalVal, Value, require_same_variant, zero_like

logger = logging.getLogger(__name__)


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @classmethod
    def of(cls, left, right) -> "Ordering":
        if left < right:
            return cls.LESS
        if left > right:
            return cls.GREATER
        return cls.EQUAL

    def flip(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self

    def as_int(self) -> int:
        return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[self]


class Undecidable(str, Enum):
    UNDECIDABLE = "undecidable"


UNDECIDABLE = Undecidable.UNDECIDABLE

TauDecision = Union[Ordering, Undecidable]


@dataclass(frozen=True)
class TauOracle:
    """An irrational tau known through a prefix [a_1; a_2, ..., a_k] of its expansion."""

    partial_quotients: Tuple[int, ...] = field()

    def __post_init__(self):
        quotients = tuple(self.partial_quotients)
        if not quotients:
            raise EmptyPrefix("tau needs at least one partial quotient")
        for a in quotients:
            if isinstance(a, bool) or not isinstance(a, int) or a < 1:
                raise ValueError(f"partial quotients must be positive integers, got {a!r}")
        object.__setattr__(self, "partial_quotients", quotients)

    @cached_property
    def convergents(self) -> List[Fraction]:
        return convergent_fractions(self.partial_quotients)

    def bracket(self) -> Tuple[Fraction, Fraction]:
        """Open interval known to contain tau."""
        c = self.convergents
        if len(c) == 1:
            return c[0], c[0] + 1
        return min(c[-2], c[-1]), max(c[-2], c[-1])

    def extend(self, more: Iterable[int]) -> "TauOracle":
        return TauOracle(self.partial_quotients + tuple(more))

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.partial_quotients) + "]"


def rational_vs_tau(r: Union[Fraction, int], tau: TauOracle) -> TauDecision:
    """
    Where the rational r lies relative to tau.

    Returns LESS when r < tau, GREATER when r > tau, and UNDECIDABLE when r
    falls strictly inside the bracket formed by the last two convergents.
    Never returns EQUAL since tau is irrational.
    """
    r = Fraction(r)
    for j, c in enumerate(tau.convergents, start=1):
        if r == c:
            # odd convergents sit below tau, even ones above
            return Ordering.LESS if j % 2 == 1 else Ordering.GREATER
    low, high = tau.bracket()
    if r <= low:
        return Ordering.LESS
    if r >= high:
        return Ordering.GREATER
    logger.debug(f"{r} lies inside ({low}, {high}); tau prefix {tau} cannot decide")
    return UNDECIDABLE


def value_cmp(a: Value, b: Value, tau: Optional[TauOracle] = None) -> Ordering:
    require_same_variant(a, b)
    if isinstance(a, RationalVal):
        return Ordering.of(a.fraction, b.fraction)
    if isinstance(a, LexVal):
        return Ordering.of((a.first, a.second), (b.first, b.second))
    return _quad_cmp(a, b, tau)


def _quad_cmp(a: QuadVal, b: QuadVal, tau: Optional[TauOracle]) -> Ordering:
    if a.b == b.b:
        return Ordering.of(a.a, b.a)
    if tau is None:
        raise InsufficientPrecision(f"ordering {a} and {b} needs a tau oracle")
    # a - b = (a.b - b.b) * (tau - r)
    r = (a.a - b.a) / (b.b - a.b)
    decision = rational_vs_tau(r, tau)
    if decision is UNDECIDABLE:
        raise InsufficientPrecision(
            f"tau prefix {tau} cannot order {a} and {b}; supply more partial quotients"
        )
    return decision.flip() if a.b > b.b else decision


def value_lt(a: Value, b: Value, tau: Optional[TauOracle] = None) -> bool:
    return value_cmp(a, b, tau) is Ordering.LESS


def value_le(a: Value, b: Value, tau: Optional[TauOracle] = None) -> bool:
    return value_cmp(a, b, tau) is not Ordering.GREATER


def is_positive(v: Value, tau: Optional[TauOracle] = None) -> bool:
    return value_cmp(v, zero_like(v), tau) is Ordering.GREATER


def sort_key(tau: Optional[TauOracle] = None):
    """A ``sorted`` key ordering values of one group."""
    return cmp_to_key(lambda x, y: value_cmp(x, y, tau).as_int())


def sort_values(values: Sequence[Value], tau: Optional[TauOracle] = None) -> List[Value]:
    return sorted(values, key=sort_key(tau))
