"""Validated valuation descriptions, representations and truncation bounds."""

import logging
from dataclasses import dataclass
from typing import Any, List, Mapping, Optional, Sequence, Tuple, Union

from poincareseries.config import get_config
from poincareseries.core import (
    CFConvention,
    LexVal,
    QuadVal,
    RationalVal,
    TauOracle,
    Value,
    is_positive,
    parse_value,
    value_cmp,
)
from poincareseries.core.ordering import Ordering
from poincareseries.dualgraph import (
    ClassificationInvariants,
    DualGraphPiece,
    ValuationType,
    classify,
    generator_count,
    piece_q,
)
from poincareseries.errors import (
    BadBetaVariant,
    BadBound,
    BadQsLength,
    BadQValue,
    DualGraphError,
    EmptyPrefix,
    InsufficientPrecision,
    MissingTau,
    NonPositiveBeta,
    SpecError,
    SpecValidationError,
    TypeMismatch,
)

logger = logging.getLogger(__name__)

_VARIANT_FOR_TYPE = {
    ValuationType.T0: RationalVal,
    ValuationType.T1: RationalVal,
    ValuationType.T2: QuadVal,
    ValuationType.T3: LexVal,
    ValuationType.T41: RationalVal,
    ValuationType.T42: LexVal,
}


@dataclass(frozen=True)
class ValuationSpec:
    """
    A valuation described by its generating values.

    ``betas`` are beta_0, beta_1, ... (for Type 1 a finite prefix of the
    infinite sequence), ``qs`` the q_i bounding the constrained coefficients.
    ``tail_nonzero`` only matters for Type 0 and ``next_beta_lower_bound``
    only for Type 1. Build through :func:`validate_spec` to get the checks.
    """

    vtype: ValuationType
    betas: Tuple[Value, ...]
    qs: Tuple[int, ...] = ()
    g: int = 0
    tau: Optional[TauOracle] = None
    tail_nonzero: bool = False
    next_beta_lower_bound: Optional[Value] = None

    def __post_init__(self):
        object.__setattr__(self, "vtype", ValuationType(self.vtype))
        object.__setattr__(self, "betas", tuple(self.betas))
        object.__setattr__(self, "qs", tuple(self.qs))

    @property
    def kind(self) -> type:
        return _VARIANT_FOR_TYPE[self.vtype]

    def constrained_indices(self) -> List[int]:
        """Indices i whose coefficient must satisfy 0 <= alpha_i <= q_i - 1."""
        vt = self.vtype
        if vt in (ValuationType.T1, ValuationType.T41):
            last = len(self.betas) - 1
        elif vt is ValuationType.T42:
            last = self.g
        elif vt is ValuationType.T0:
            last = self.g if self.tail_nonzero else self.g - 1
        else:  # T2, T3: 1 <= i < g'
            last = self.g - 1
        return list(range(1, last + 1))

    def caps(self) -> Tuple[Optional[int], ...]:
        """Per-index maximum coefficient, ``None`` for free indices."""
        caps: List[Optional[int]] = [None] * len(self.betas)
        for i in self.constrained_indices():
            caps[i] = self.qs[i - 1] - 1
        return tuple(caps)


@dataclass(frozen=True)
class Representation:
    """Coefficients alpha_0, alpha_1, ... aligned with a spec's betas."""

    alphas: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))

    def is_admissible(self, spec: ValuationSpec) -> bool:
        return is_admissible(spec, self.alphas)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.alphas) + ")"


def is_admissible(spec: ValuationSpec, alphas: Sequence[int]) -> bool:
    if len(alphas) != len(spec.betas) or any(a < 0 for a in alphas):
        return False
    return all(cap is None or alpha <= cap for alpha, cap in zip(alphas, spec.caps()))


@dataclass(frozen=True)
class Scalar:
    """Truncate at every value <= ``value`` (rational and a + b*tau groups)."""

    value: Value


@dataclass(frozen=True)
class Box:
    """Truncate Z^2 values to 0 <= first <= first_max, 0 <= second <= second_max."""

    first_max: int
    second_max: int

    def __post_init__(self):
        if self.first_max < 1 or self.second_max < 1:
            raise ValueError(f"box entries must be >= 1, got ({self.first_max},{self.second_max})")

    def contains(self, v: LexVal) -> bool:
        return 0 <= v.first <= self.first_max and 0 <= v.second <= self.second_max

    def __str__(self) -> str:
        return f"({self.first_max},{self.second_max})"


TruncationBound = Union[Scalar, Box]


def check_bound(spec: ValuationSpec, bound: TruncationBound) -> None:
    """Raise BadBound unless ``bound`` fits the spec's value group."""
    if spec.kind is LexVal:
        if not isinstance(bound, Box):
            raise BadBound("Z^2 specs are truncated by a box, e.g. (2,2)")
        return
    if not isinstance(bound, Scalar):
        raise BadBound(f"{spec.kind.__name__} specs need a scalar bound")
    if not isinstance(bound.value, spec.kind):
        raise BadBound(f"bound {bound.value} is not a {spec.kind.__name__}")
    if not is_positive(bound.value, spec.tau):
        raise BadBound(f"bound {bound.value} must be strictly positive")


def within_bound(v: Value, bound: TruncationBound, tau: Optional[TauOracle] = None) -> bool:
    if isinstance(bound, Box):
        return bound.contains(v)
    return value_cmp(v, bound.value, tau) is not Ordering.GREATER


def derive_qs(
    pieces: Sequence[Sequence[int]], conv: CFConvention = CFConvention.PLUS
) -> List[int]:
    """q_i of each multi-segment piece; a trailing one-segment tail piece is skipped."""
    qs = []
    for counts in pieces:
        piece = DualGraphPiece(tuple(counts))
        if piece.is_tail:
            continue
        qs.append(piece_q(piece, conv)[1])
    return qs


# -- validation -------------------------------------------------------------------


def _expected_lengths(vtype: ValuationType, g: int, tail_nonzero: bool, n_betas: int):
    """(allowed len(betas), allowed len(qs))."""
    if vtype is ValuationType.T1:
        return {n_betas}, {n_betas - 1}
    if vtype is ValuationType.T0:
        if tail_nonzero:
            return {g + 2}, {g}
        return {g + 1}, {g}
    top = generator_count(vtype, g)
    if vtype in (ValuationType.T2, ValuationType.T3):
        return {top + 1}, {g - 1}
    return {top + 1}, {g}


def _coerce_value(raw: Any) -> Value:
    if isinstance(raw, (RationalVal, QuadVal, LexVal)):
        return raw
    if isinstance(raw, int) and not isinstance(raw, bool):
        return RationalVal(raw)
    return parse_value(str(raw))


def _coerce_tau(raw: Any) -> Optional[TauOracle]:
    if raw is None or isinstance(raw, TauOracle):
        return raw
    return TauOracle(tuple(int(a) for a in raw))


def _coerce_classification(raw: Any) -> Optional[ClassificationInvariants]:
    if raw is None or isinstance(raw, ClassificationInvariants):
        return raw
    if not isinstance(raw, Mapping):
        raw = dict(raw)
    return ClassificationInvariants(
        rank=int(raw["rank"]),
        rational_rank=int(raw["rational_rank"]),
        dimension=int(raw["dimension"]),
        discrete=bool(raw["discrete"]),
    )


def spec_violations(
    spec: ValuationSpec, classification: Optional[ClassificationInvariants] = None
) -> List[SpecError]:
    """Every rule ``spec`` breaks; an empty list means it is valid."""
    violations: List[SpecError] = []
    vt = spec.vtype
    kind = spec.kind

    if spec.g < 0:
        violations.append(BadQsLength(f"g must be nonnegative, got {spec.g}"))
        return violations
    if not spec.betas:
        violations.append(BadQsLength("at least beta_0 is required"))
        return violations
    if vt in (ValuationType.T2, ValuationType.T3) and spec.g < 1:
        violations.append(BadQsLength(f"Type {vt.value} needs g >= 1"))
        return violations

    beta_lengths, q_lengths = _expected_lengths(vt, spec.g, spec.tail_nonzero, len(spec.betas))
    if len(spec.betas) not in beta_lengths:
        violations.append(
            BadQsLength(
                f"Type {vt.value} with g={spec.g} needs {sorted(beta_lengths)} betas, "
                f"got {len(spec.betas)}"
            )
        )
    if len(spec.qs) not in q_lengths:
        violations.append(
            BadQsLength(
                f"Type {vt.value} with g={spec.g} needs {sorted(q_lengths)} q's, "
                f"got {len(spec.qs)}"
            )
        )
    for i, q in enumerate(spec.qs, start=1):
        if q < 2:
            violations.append(BadQValue(f"q_{i} = {q} is below 2"))

    if vt is ValuationType.T2 and spec.tau is None:
        violations.append(MissingTau("Type 2 values a+b*tau need a tau prefix"))

    variants_ok = True
    for i, beta in enumerate(spec.betas):
        if not isinstance(beta, kind):
            variants_ok = False
            violations.append(
                BadBetaVariant(f"beta_{i} = {beta} is not a {kind.__name__} (Type {vt.value})")
            )
        elif vt in (ValuationType.T0, ValuationType.T41) and not beta.is_integer:
            variants_ok = False
            violations.append(BadBetaVariant(f"beta_{i} = {beta} must be an integer"))
    if variants_ok and vt is ValuationType.T2 and all(b.b == 0 for b in spec.betas):
        violations.append(BadBetaVariant("some beta must involve tau (b != 0)"))

    if variants_ok:
        for i, beta in enumerate(spec.betas):
            violation = _positivity_violation(i, beta, spec.tau)
            if violation is not None:
                violations.append(violation)

    nb = spec.next_beta_lower_bound
    if nb is not None:
        if vt is not ValuationType.T1:
            logger.warning(f"⚠️  next_beta_lower_bound is ignored for Type {vt.value}")
        elif not isinstance(nb, RationalVal):
            violations.append(BadBetaVariant(f"next_beta_lower_bound {nb} is not rational"))

    if classification is not None:
        try:
            candidates = classify(classification)
        except DualGraphError as e:
            violations.append(TypeMismatch(str(e)))
        else:
            if vt not in candidates:
                labels = ", ".join(sorted(t.value for t in candidates))
                violations.append(
                    TypeMismatch(f"declared Type {vt.value} is not among candidates {{{labels}}}")
                )
    return violations


def _positivity_violation(i: int, beta: Value, tau: Optional[TauOracle]) -> Optional[SpecError]:
    if isinstance(beta, LexVal):
        if beta.first < 0 or beta.second < 0 or (beta.first, beta.second) == (0, 0):
            return NonPositiveBeta(
                f"beta_{i} = {beta} must be componentwise >= 0 and nonzero"
            )
        return None
    if isinstance(beta, QuadVal) and tau is None:
        return None  # reported as MissingTau
    try:
        positive = is_positive(beta, tau)
    except InsufficientPrecision as e:
        return NonPositiveBeta(f"sign of beta_{i} = {beta} is undecided: {e}")
    if not positive:
        return NonPositiveBeta(f"beta_{i} = {beta} is not strictly positive")
    return None


def validate_spec(
    raw: Union[Mapping[str, Any], ValuationSpec],
    classification: Optional[ClassificationInvariants] = None,
) -> ValuationSpec:
    """
    Build a checked ValuationSpec.

    Args:
        raw: A ValuationSpec, or a mapping with the spec-file keys (``type``,
            ``g``, ``betas``, ``qs``, ``tau``, ``tail_nonzero``,
            ``next_beta_lower_bound``, ``pieces``, ``cf_convention``,
            ``classification``); values may be encodings or parsed objects
        classification: Invariants to cross-check the declared type against

    Raises:
        SpecValidationError: carrying every violation found
    """
    if isinstance(raw, ValuationSpec):
        spec = raw
    else:
        spec, raw_classification = _spec_from_mapping(raw)
        classification = classification or raw_classification

    violations = spec_violations(spec, classification)
    if violations:
        for v in violations:
            logger.debug(f"spec violation {type(v).__name__}: {v}")
        raise SpecValidationError(violations)
    logger.info(f"✅ Type {spec.vtype.value} spec valid: {len(spec.betas)} betas, qs={list(spec.qs)}")
    return spec


def _spec_from_mapping(raw: Mapping[str, Any]):
    try:
        vtype = ValuationType(str(raw["type"]))
    except (KeyError, ValueError) as e:
        raise SpecValidationError([TypeMismatch(f"missing or unknown type: {e}")]) from None

    try:
        betas = tuple(_coerce_value(b) for b in raw.get("betas") or ())
        nb = raw.get("next_beta_lower_bound")
        next_bound = _coerce_value(nb) if nb is not None else None
    except (TypeError, ValueError) as e:
        raise SpecValidationError([BadBetaVariant(str(e))]) from None

    qs = raw.get("qs")
    if qs is None and raw.get("pieces") is not None:
        conv = CFConvention(raw.get("cf_convention") or get_config()["cf_convention"])
        qs = derive_qs(raw["pieces"], conv)
    qs = tuple(int(q) for q in qs or ())

    g = raw.get("g")
    if g is None:
        g = len(betas) - 1 if vtype is ValuationType.T1 else 0
    try:
        tau = _coerce_tau(raw.get("tau"))
        classification = _coerce_classification(raw.get("classification"))
    except (DualGraphError, EmptyPrefix, ValueError, KeyError) as e:
        raise SpecValidationError([TypeMismatch(str(e))]) from None

    spec = ValuationSpec(
        vtype=vtype,
        betas=betas,
        qs=qs,
        g=int(g),
        tau=tau,
        tail_nonzero=bool(raw.get("tail_nonzero") or False),
        next_beta_lower_bound=next_bound,
    )
    return spec, classification
