"""Enumerating value-semigroup elements with their unique constrained representations.

Every element s <= bound of S is sum(alpha_i * beta_i) where some alpha_i are
bounded by q_i - 1 and the rest are free. The generated set is walked directly
over alpha-tuples; the brute-force oracle drops the q_i bounds and must
produce the same set of values.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from poincareseries.config import get_config
from poincareseries.core import LexVal, Ordering, Value, combine, is_positive, value_cmp, zero_like
from poincareseries.core.ordering import sort_key
from poincareseries.dualgraph import ValuationType
from poincareseries.errors import (
    DivisorialUnsupported,
    MissingNextBetaBound,
    RepresentationCollision,
    TruncationTooLarge,
    UncertifiedTruncation,
)
from .spec import (
    Box,
    Representation,
    Scalar,
    TruncationBound,
    ValuationSpec,
    check_bound,
    is_admissible,
    within_bound,
)

logger = logging.getLogger(__name__)

Alphas = Tuple[int, ...]


def certify_truncation(spec: ValuationSpec, bound: TruncationBound) -> None:
    """
    Check that a Type 1 prefix accounts for every value up to ``bound``.

    Raises:
        MissingNextBetaBound: no lower bound on the first unlisted beta
        UncertifiedTruncation: that lower bound does not exceed ``bound``
    """
    if spec.vtype is not ValuationType.T1:
        return
    nb = spec.next_beta_lower_bound
    if nb is None:
        raise MissingNextBetaBound(
            "Type 1 truncation needs next_beta_lower_bound above the bound"
        )
    if value_cmp(nb, bound.value, spec.tau) is not Ordering.GREATER:
        raise UncertifiedTruncation(
            f"next_beta_lower_bound {nb} does not exceed the bound {bound.value}"
        )


def _preflight(spec: ValuationSpec, bound: TruncationBound) -> None:
    if spec.vtype.divisorial:
        raise DivisorialUnsupported(
            "Type 0 lengths can exceed 1; use the formula series for divisorial valuations"
        )
    check_bound(spec, bound)
    certify_truncation(spec, bound)


def _walk(
    spec: ValuationSpec,
    bound: TruncationBound,
    caps: Sequence[Optional[int]],
) -> Iterator[Tuple[Alphas, Value]]:
    """Yield every (alphas, value) within ``bound`` respecting ``caps``."""
    betas = spec.betas
    limit = get_config()["max_terms"]
    produced = 0

    def descend(index: int, partial: Value, alphas: List[int]):
        nonlocal produced
        if index == len(betas):
            produced += 1
            if produced > limit:
                raise TruncationTooLarge(
                    f"more than {limit} representations below {bound}; raise max_terms"
                )
            yield tuple(alphas), partial
            return
        cap = caps[index]
        alpha, value = 0, partial
        # betas are positive, so once a partial sum leaves the bound it stays out
        while (cap is None or alpha <= cap) and within_bound(value, bound, spec.tau):
            alphas.append(alpha)
            yield from descend(index + 1, value, alphas)
            alphas.pop()
            alpha += 1
            value = value + betas[index]

    yield from descend(0, zero_like(betas[0]), [])


def enumerate_values(
    spec: ValuationSpec, bound: TruncationBound
) -> List[Tuple[Value, Representation]]:
    """
    Every element of S up to ``bound`` with its constrained representation.

    The list is strictly increasing in the value-group order and starts with
    0 and the all-zero representation.

    Raises:
        DivisorialUnsupported: for Type 0
        MissingNextBetaBound: Type 1 without a completeness certificate
        InsufficientPrecision: tau prefix too short to order two values
        RepresentationCollision: two admissible tuples give the same value
    """
    _preflight(spec, bound)
    found: Dict[Value, Alphas] = {}
    for alphas, value in _walk(spec, bound, spec.caps()):
        if value in found:
            raise RepresentationCollision(value, [found[value], alphas])
        found[value] = alphas

    ordered = sorted(found, key=sort_key(spec.tau))
    logger.info(f"📊 enumerated {len(ordered)} semigroup values up to {_bound_text(bound)}")
    return [(v, Representation(found[v])) for v in ordered]


def brute_force_oracle(spec: ValuationSpec, bound: TruncationBound) -> Dict[Value, List[Alphas]]:
    """
    Every value up to ``bound`` with every tuple of nonnegative coefficients producing it.

    Ignores the q_i bounds. Keys are in increasing order, tuples sorted.
    """
    _preflight(spec, bound)
    multimap: Dict[Value, List[Alphas]] = {}
    for alphas, value in _walk(spec, bound, [None] * len(spec.betas)):
        multimap.setdefault(value, []).append(alphas)
    return {v: sorted(multimap[v]) for v in sorted(multimap, key=sort_key(spec.tau))}


@dataclass
class UniquenessViolation:
    value: Value
    admissible: List[Alphas]
    all_representations: List[Alphas]

    def describe(self) -> str:
        reps = " ".join("(" + ",".join(map(str, a)) + ")" for a in self.admissible)
        return f"{self.value}: {len(self.admissible)} admissible {reps or '-'}"


@dataclass
class UniquenessReport:
    values_checked: int = 0
    violations: List[UniquenessViolation] = field(default_factory=list)
    disagreements: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.disagreements

    @property
    def first_failure(self) -> Optional[Value]:
        return self.violations[0].value if self.violations else None


def verify_uniqueness(spec: ValuationSpec, bound: TruncationBound) -> UniquenessReport:
    """
    Check the unique-representation property against the brute-force oracle.

    Every value the oracle finds must have exactly one representation meeting
    the q_i bounds, and that representation must be the one enumerate_values
    reports.
    """
    oracle = brute_force_oracle(spec, bound)
    report = UniquenessReport(values_checked=len(oracle))
    for value, reps in oracle.items():
        admissible = [a for a in reps if is_admissible(spec, a)]
        if len(admissible) != 1:
            report.violations.append(UniquenessViolation(value, admissible, reps))

    if report.violations:
        logger.warning(
            f"⚠️  uniqueness fails at {len(report.violations)} value(s), "
            f"first at {report.first_failure}"
        )
        return report

    enumerated = dict(enumerate_values(spec, bound))
    if set(enumerated) != set(oracle):
        missing = [str(v) for v in oracle if v not in enumerated]
        extra = [str(v) for v in enumerated if v not in oracle]
        report.disagreements.append(f"value sets differ: missing {missing}, extra {extra}")
    for value, reps in oracle.items():
        rep = enumerated.get(value)
        expected = next(a for a in reps if is_admissible(spec, a))
        if rep is not None and rep.alphas != expected:
            report.disagreements.append(f"{value}: enumerated {rep} but oracle admits {expected}")
        if rep is not None and combine(rep.alphas, spec.betas) != value:
            report.disagreements.append(f"{value}: {rep} sums to {combine(rep.alphas, spec.betas)}")

    logger.info(
        f"{'✅' if report.passed else '❌'} uniqueness over {report.values_checked} values"
    )
    return report


def represent(spec: ValuationSpec, value: Value) -> Optional[Representation]:
    """The constrained representation of ``value``, or None when it is not in S."""
    if value == zero_like(spec.betas[0]):
        return Representation((0,) * len(spec.betas))
    if isinstance(value, LexVal):
        if value.first < 0 or value.second < 0:
            return None
        bound: TruncationBound = Box(max(value.first, 1), max(value.second, 1))
    else:
        if not is_positive(value, spec.tau):
            return None
        bound = Scalar(value)
    for v, rep in enumerate_values(spec, bound):
        if v == value:
            return rep
    return None


def _bound_text(bound: TruncationBound) -> str:
    return str(bound.value) if isinstance(bound, Scalar) else f"box {bound}"
