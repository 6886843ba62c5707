from .continued_fractions import DualGraphPiece, cf_simplify, piece_q
from .classification import (
    CLASSIFICATION_TABLE,
    INFINITE,
    ClassificationInvariants,
    ValuationType,
    classify,
    generator_count,
    table_row,
)

__all__ = [
    "DualGraphPiece",
    "cf_simplify",
    "piece_q",
    "CLASSIFICATION_TABLE",
    "INFINITE",
    "ClassificationInvariants",
    "ValuationType",
    "classify",
    "generator_count",
    "table_row",
]
