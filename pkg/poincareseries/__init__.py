"""Exact value semigroups and Poincaré series of valuations on two-dimensional function fields."""

from .config import get_config, set_config
from .core import LexVal, Ordering, QuadVal, RationalVal, TauOracle, value_cmp
from .dualgraph import ClassificationInvariants, DualGraphPiece, ValuationType, classify
from .semigroup import Box, Scalar, ValuationSpec, enumerate_values, validate_spec, verify_uniqueness
from .poincare import (
    diff_series,
    expand_factors,
    series_factors,
    series_from_enumeration,
    series_from_formula,
)

__version__ = "0.1.0"

__all__ = [
    "get_config",
    "set_config",
    "RationalVal",
    "QuadVal",
    "LexVal",
    "TauOracle",
    "Ordering",
    "value_cmp",
    "ValuationType",
    "ClassificationInvariants",
    "DualGraphPiece",
    "classify",
    "ValuationSpec",
    "Scalar",
    "Box",
    "validate_spec",
    "enumerate_values",
    "verify_uniqueness",
    "series_factors",
    "expand_factors",
    "series_from_formula",
    "series_from_enumeration",
    "diff_series",
]
