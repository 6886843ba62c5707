"""Simplification of dual-graph pieces through their continued fractions."""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from poincareseries.core.continued_fractions import CFConvention, convergents
from poincareseries.errors import ZeroDenominator

logger = logging.getLogger(__name__)


def cf_simplify(
    terms: Sequence[int], conv: CFConvention = CFConvention.PLUS
) -> Tuple[int, int]:
    """
    Evaluate a continued fraction exactly.

    Args:
        terms: Positive partial quotients a_1, ..., a_n
        conv: ``PLUS`` for a1 + 1/(a2 + ...), ``HIRZEBRUCH_JUNG`` for a1 - 1/(a2 - ...)

    Returns:
        (p, q) with gcd(p, q) = 1 and q >= 1

    Raises:
        ZeroDenominator: a Hirzebruch-Jung tail evaluated to zero
    """
    terms = list(terms)
    if not terms:
        raise ValueError("continued fraction needs at least one term")
    if any(isinstance(a, bool) or not isinstance(a, int) or a < 1 for a in terms):
        raise ValueError(f"continued fraction terms must be positive integers: {terms}")

    conv = CFConvention(conv)
    if conv is CFConvention.PLUS:
        return convergents(terms, conv)[-1]

    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        if value == 0:
            raise ZeroDenominator(f"Hirzebruch-Jung fraction {terms} divides by zero")
        value = a - 1 / value
    return value.numerator, value.denominator


@dataclass(frozen=True)
class DualGraphPiece:
    """Vertex counts a_1, ..., a_m of the segments of one dual-graph piece."""

    segment_vertex_counts: Tuple[int, ...]
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        counts = tuple(self.segment_vertex_counts)
        if not counts:
            raise ValueError("a dual-graph piece has at least one segment")
        if any(isinstance(a, bool) or not isinstance(a, int) or a < 1 for a in counts):
            raise ValueError(f"segment vertex counts must be positive integers: {counts}")
        object.__setattr__(self, "segment_vertex_counts", counts)

    @property
    def segments(self) -> int:
        return len(self.segment_vertex_counts)

    @property
    def is_tail(self) -> bool:
        return self.segments == 1

    def simplify(self, conv: CFConvention = CFConvention.PLUS) -> "DualGraphPiece":
        p, q = piece_q(self, conv)
        return replace(self, p=p, q=q)


def piece_q(
    piece: DualGraphPiece, conv: CFConvention = CFConvention.PLUS
) -> Tuple[int, int]:
    """(p, q) from simplifying [a_1, ..., a_m, 1]."""
    conv = CFConvention(conv)
    p, q = cf_simplify(piece.segment_vertex_counts + (1,), conv)
    logger.debug(f"piece {list(piece.segment_vertex_counts)} ({conv.value}) -> {p}/{q}")
    return p, q
