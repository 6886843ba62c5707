from .factors import Geom, Pair, SeriesFactor, render_product, series_factors
from .series import (
    SeriesDiff,
    SeriesTruncation,
    diff_series,
    expand_factors,
    format_bound,
    series_from_enumeration,
    series_from_formula,
)

__all__ = [
    "Geom",
    "Pair",
    "SeriesFactor",
    "series_factors",
    "render_product",
    "SeriesTruncation",
    "SeriesDiff",
    "expand_factors",
    "series_from_formula",
    "series_from_enumeration",
    "diff_series",
    "format_bound",
]
