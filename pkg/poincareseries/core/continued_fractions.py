"""Continued-fraction convergents under the two conventions in use for dual graphs."""

from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple


class CFConvention(str, Enum):
    PLUS = "plus"  # a1 + 1/(a2 + 1/(...))
    HIRZEBRUCH_JUNG = "hj"  # a1 - 1/(a2 - 1/(...))

    @property
    def sign(self) -> int:
        return 1 if self is CFConvention.PLUS else -1


def convergents(
    terms: Sequence[int], conv: CFConvention = CFConvention.PLUS
) -> List[Tuple[int, int]]:
    """
    Successive convergents (p_k, q_k) of [a_1, ..., a_n].

    Uses p_k = a_k p_{k-1} + e p_{k-2} and q_k = a_k q_{k-1} + e q_{k-2}, with
    e = +1 for the plus convention and e = -1 for Hirzebruch-Jung. The pairs
    are not normalised, so a Hirzebruch-Jung q_k may be zero or negative.
    """
    conv = CFConvention(conv)
    p_prev, p = 1, terms[0]
    q_prev, q = 0, 1
    result = [(p, q)]
    for a in terms[1:]:
        p, p_prev = a * p + conv.sign * p_prev, p
        q, q_prev = a * q + conv.sign * q_prev, q
        result.append((p, q))
    return result


def convergent_fractions(terms: Sequence[int]) -> List[Fraction]:
    """Plus-convention convergents as exact fractions."""
    return [Fraction(p, q) for p, q in convergents(terms, CFConvention.PLUS)]
