"""The classification table for valuations on two-dimensional function fields
and the size of their minimal generating sequences."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Tuple, Union

from poincareseries.errors import AbhyankarViolation, DivisorialUnsupported, NoMatchingRow


class ValuationType(str, Enum):
    T0 = "0"
    T1 = "1"
    T2 = "2"
    T3 = "3"
    T41 = "4.1"
    T42 = "4.2"

    @property
    def divisorial(self) -> bool:
        return self is ValuationType.T0


@dataclass(frozen=True)
class ClassificationInvariants:
    rank: int
    rational_rank: int
    dimension: int
    discrete: bool

    def __post_init__(self):
        if self.rank not in (1, 2):
            raise ValueError(f"rank must be 1 or 2, got {self.rank}")
        if self.rational_rank not in (1, 2):
            raise ValueError(f"rational rank must be 1 or 2, got {self.rational_rank}")
        if self.dimension not in (0, 1):
            raise ValueError(f"dimension must be 0 or 1, got {self.dimension}")
        if self.rational_rank + self.dimension > 2:
            raise AbhyankarViolation(
                f"rr + d = {self.rational_rank + self.dimension} exceeds 2"
            )

    def key(self) -> Tuple[int, int, int, bool]:
        return (self.rank, self.rational_rank, self.dimension, self.discrete)


# (rank, rational rank, dimension, discrete) -> (types, value group)
CLASSIFICATION_TABLE: Dict[Tuple[int, int, int, bool], Tuple[FrozenSet[ValuationType], str]] = {
    (1, 1, 1, True): (frozenset({ValuationType.T0}), "Z"),
    (1, 1, 0, False): (frozenset({ValuationType.T1}), "additive subgroup of Q"),
    (1, 2, 0, False): (frozenset({ValuationType.T2}), "Z + Z*tau"),
    (2, 2, 0, True): (frozenset({ValuationType.T3, ValuationType.T42}), "Z^2"),
    (1, 1, 0, True): (frozenset({ValuationType.T41}), "Z"),
}

INFINITE = math.inf

GeneratorCount = Union[int, float]


def classify(inv: ClassificationInvariants) -> FrozenSet[ValuationType]:
    """Candidate types for a row of classical invariants."""
    try:
        return CLASSIFICATION_TABLE[inv.key()][0]
    except KeyError:
        raise NoMatchingRow(
            f"no valuation type has rank={inv.rank}, rr={inv.rational_rank}, "
            f"d={inv.dimension}, {'discrete' if inv.discrete else 'non-discrete'}"
        ) from None


def table_row(vtype: ValuationType) -> Tuple[ClassificationInvariants, str]:
    """The invariants row and value group a declared type belongs to."""
    vtype = ValuationType(vtype)
    for (rank, rr, d, discrete), (types, group) in CLASSIFICATION_TABLE.items():
        if vtype in types:
            return ClassificationInvariants(rank, rr, d, discrete), group
    raise NoMatchingRow(f"type {vtype.value} is missing from the table")


def generator_count(vtype: ValuationType, g: int) -> GeneratorCount:
    """
    g', the top index of a minimal generating sequence beta_0, ..., beta_g'.

    Type 1 sequences are infinite and return ``INFINITE``.
    """
    vtype = ValuationType(vtype)
    if g < 0:
        raise ValueError(f"g must be nonnegative, got {g}")
    if vtype is ValuationType.T0:
        raise DivisorialUnsupported("the generator-count table starts at Type 1")
    if vtype is ValuationType.T1:
        return INFINITE
    if vtype is ValuationType.T42:
        return g + 1
    return g
