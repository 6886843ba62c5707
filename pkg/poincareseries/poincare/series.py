"""Truncated Poincaré series: exact expansion of factor products, the
enumeration-based series, and comparison of the two."""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from poincareseries.config import get_config
from poincareseries.core import (
    LexVal,
    Ordering,
    TauOracle,
    Value,
    is_positive,
    value_cmp,
    zero_like,
)
from poincareseries.core.ordering import sort_key
from poincareseries.core.values import require_same_variant
from poincareseries.dualgraph import ValuationType
from poincareseries.errors import (
    BadBound,
    BoundMismatch,
    MissingNextBetaBound,
    TruncationTooLarge,
)
from poincareseries.semigroup import (
    Box,
    Scalar,
    TruncationBound,
    ValuationSpec,
    check_bound,
    enumerate_values,
    within_bound,
)
from .factors import Geom, SeriesFactor, series_factors

logger = logging.getLogger(__name__)

Term = Tuple[Value, int]


@dataclass(frozen=True)
class SeriesTruncation:
    """Terms (value, coefficient) of a series up to ``bound``, increasing in value."""

    terms: Tuple[Term, ...]
    bound: TruncationBound
    complete: bool = True

    def coefficient(self, v: Value) -> int:
        for value, coeff in self.terms:
            if value == v:
                return coeff
        return 0

    def values(self) -> List[Value]:
        return [v for v, _ in self.terms]

    def all_ones(self) -> bool:
        return all(c == 1 for _, c in self.terms)

    def to_text(self) -> str:
        """Header line plus one ``<value>\\t<coeff>`` line per term."""
        lines = [f"# bound={format_bound(self.bound)} complete={str(self.complete).lower()}"]
        lines.extend(f"{v}\t{c}" for v, c in self.terms)
        return "\n".join(lines) + "\n"


def format_bound(bound: TruncationBound) -> str:
    return str(bound.value) if isinstance(bound, Scalar) else str(bound)


def _check_factor(f: SeriesFactor, bound: TruncationBound, tau: Optional[TauOracle]) -> None:
    beta = f.beta
    if isinstance(bound, Box):
        if not isinstance(beta, LexVal):
            raise BadBound(f"box bound {bound} needs Z^2 exponents, got {beta}")
        if beta.first < 0 or beta.second < 0 or (beta.first, beta.second) == (0, 0):
            raise ValueError(f"factor exponent {beta} must be componentwise >= 0 and nonzero")
        return
    require_same_variant(beta, bound.value)
    if not is_positive(beta, tau):
        raise ValueError(f"factor exponent {beta} must be strictly positive")


def _factor_terms(f: SeriesFactor, bound: TruncationBound, tau: Optional[TauOracle]) -> List[Term]:
    """Nonzero terms of one factor up to ``bound``, increasing."""
    terms = []
    n, power = 0, zero_like(f.beta)
    # Pair(q, beta) is the finite sum of t^(n*beta) for n < q
    while (isinstance(f, Geom) or n < f.q) and within_bound(power, bound, tau):
        terms.append((power, 1))
        n += 1
        power = power + f.beta
    return terms


def expand_factors(
    factors: Sequence[SeriesFactor],
    bound: TruncationBound,
    tau: Optional[TauOracle] = None,
    *,
    infinite_product: bool = False,
    next_beta_lower_bound: Optional[Value] = None,
) -> SeriesTruncation:
    """
    Exact coefficients of a product of factors up to ``bound``.

    Args:
        factors: Geom and Pair factors
        bound: Scalar for rational and a + b*tau exponents, Box for Z^2
        tau: Needed when exponents involve tau
        infinite_product: The factors are a prefix of an infinite product
            (Type 1); the result is then complete only when
            ``next_beta_lower_bound`` lies above the bound

    Raises:
        MissingNextBetaBound: ``infinite_product`` without ``next_beta_lower_bound``
        InsufficientPrecision: tau prefix too short to order two exponents
    """
    if isinstance(bound, Scalar) and not is_positive(bound.value, tau):
        raise BadBound(f"bound {bound.value} must be strictly positive")
    complete = True
    if infinite_product:
        if next_beta_lower_bound is None:
            raise MissingNextBetaBound("truncating an infinite product needs next_beta_lower_bound")
        complete = value_cmp(next_beta_lower_bound, bound.value, tau) is Ordering.GREATER
        if not complete:
            logger.warning(
                f"⚠️  next_beta_lower_bound {next_beta_lower_bound} does not exceed "
                f"{format_bound(bound)}; series marked incomplete"
            )

    limit = get_config()["max_terms"]
    if factors:
        zero = zero_like(factors[0].beta)
    elif isinstance(bound, Box):
        zero = LexVal(0, 0)
    else:
        zero = zero_like(bound.value)
    product: Dict[Value, int] = {zero: 1}

    for f in factors:
        _check_factor(f, bound, tau)
        factor_terms = _factor_terms(f, bound, tau)
        merged: Dict[Value, int] = defaultdict(int)
        for v1, c1 in product.items():
            for v2, c2 in factor_terms:
                v = v1 + v2
                if not within_bound(v, bound, tau):
                    break
                merged[v] += c1 * c2
        if len(merged) > limit:
            raise TruncationTooLarge(f"expansion exceeds {limit} terms; raise max_terms")
        product = dict(merged)
        logger.debug(f"after {f}: {len(product)} terms")

    ordered = sorted(product, key=sort_key(tau))
    return SeriesTruncation(tuple((v, product[v]) for v in ordered), bound, complete)


def series_from_formula(spec: ValuationSpec, bound: TruncationBound) -> SeriesTruncation:
    """Expand the closed-form product for ``spec`` up to ``bound``."""
    check_bound(spec, bound)
    series = expand_factors(
        series_factors(spec),
        bound,
        spec.tau,
        infinite_product=spec.vtype is ValuationType.T1,
        next_beta_lower_bound=spec.next_beta_lower_bound,
    )
    logger.info(f"🧮 formula series: {len(series.terms)} terms up to {format_bound(bound)}")
    return series


def series_from_enumeration(spec: ValuationSpec, bound: TruncationBound) -> SeriesTruncation:
    """
    P_nu(t) from the enumerated semigroup, every length being 1.

    Raises:
        DivisorialUnsupported: for Type 0, whose lengths can exceed 1
    """
    values = enumerate_values(spec, bound)
    return SeriesTruncation(tuple((v, 1) for v, _ in values), bound, True)


@dataclass
class SeriesDiff:
    mismatches: List[Tuple[Value, int, int]] = field(default_factory=list)
    total_mismatches: int = 0

    @property
    def equal(self) -> bool:
        return self.total_mismatches == 0

    def describe(self) -> str:
        if self.equal:
            return "VERIFIED"
        first = "; ".join(f"{v}: {a} vs {b}" for v, a, b in self.mismatches)
        return f"MISMATCH ({self.total_mismatches}) first at {first}"


def diff_series(
    a: SeriesTruncation,
    b: SeriesTruncation,
    tau: Optional[TauOracle] = None,
    limit: Optional[int] = None,
) -> SeriesDiff:
    """
    Compare two truncations term by term.

    Returns the first ``limit`` mismatching (value, coeff_a, coeff_b) triples
    in increasing value order (default limit from config ``mismatch_limit``).

    Raises:
        BoundMismatch: the truncations have different bounds
    """
    if a.bound != b.bound:
        raise BoundMismatch(f"bounds differ: {format_bound(a.bound)} vs {format_bound(b.bound)}")
    if limit is None:
        limit = get_config()["mismatch_limit"]
    if a.terms and b.terms:
        require_same_variant(a.terms[0][0], b.terms[0][0])

    coeffs_a = dict(a.terms)
    coeffs_b = dict(b.terms)
    diff = SeriesDiff()
    for v in sorted(set(coeffs_a) | set(coeffs_b), key=sort_key(tau)):
        ca, cb = coeffs_a.get(v, 0), coeffs_b.get(v, 0)
        if ca != cb:
            diff.total_mismatches += 1
            if len(diff.mismatches) < limit:
                diff.mismatches.append((v, ca, cb))
    return diff
