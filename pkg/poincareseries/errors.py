"""Exception hierarchy shared by every engine module and the CLI."""

from typing import Any, List, Optional, Sequence, Tuple


class PoincareSeriesError(Exception):
    """Base class for all engine errors."""


# -- value groups -------------------------------------------------------------


class ValueGroupError(PoincareSeriesError):
    """Arithmetic or ordering problem inside a value group."""


class MixedVariant(ValueGroupError):
    """Two values from different value groups were combined or compared."""

    def __init__(self, left: Any, right: Any):
        self.left = left
        self.right = right
        super().__init__(
            f"cannot combine {type(left).__name__} with {type(right).__name__}"
        )


class InsufficientPrecision(ValueGroupError):
    """The tau prefix is too short to order two values."""


class EmptyPrefix(ValueGroupError):
    """A tau oracle was built from an empty list of partial quotients."""


# -- dual graphs ----------------------------------------------------------------


class DualGraphError(PoincareSeriesError):
    """Problem with continued fractions or the classification tables."""


class ZeroDenominator(DualGraphError):
    """A Hirzebruch-Jung continued fraction collapsed to a zero denominator."""


class NoMatchingRow(DualGraphError):
    """Classical invariants that match no row of the classification table."""


class AbhyankarViolation(DualGraphError):
    """Invariants with rational rank + dimension > 2."""


class DivisorialUnsupported(DualGraphError):
    """The requested operation is not defined for divisorial (Type 0) valuations."""


# -- valuation specs ------------------------------------------------------------


class SpecError(PoincareSeriesError):
    """A single violation found while validating a valuation spec."""


class BadQsLength(SpecError):
    pass


class BadQValue(SpecError):
    """A q_i below 2."""


class BadBetaVariant(SpecError):
    pass


class NonPositiveBeta(SpecError):
    pass


class MissingTau(SpecError):
    pass


class TypeMismatch(SpecError):
    pass


class MissingNextBetaBound(SpecError):
    """A Type 1 spec was truncated without a certified lower bound on the next beta."""


class UncertifiedTruncation(MissingNextBetaBound):
    """The next-beta lower bound does not lie above the truncation bound."""


class SpecValidationError(SpecError):
    """Aggregate of every violation found in one spec."""

    def __init__(self, violations: Sequence[SpecError]):
        self.violations: List[SpecError] = list(violations)
        lines = "; ".join(f"{type(v).__name__}: {v}" for v in self.violations)
        super().__init__(f"{len(self.violations)} violation(s): {lines}")


# -- enumeration and series -----------------------------------------------------


class EnumerationError(PoincareSeriesError):
    pass


class BadBound(EnumerationError):
    """The truncation bound does not live in the spec's value group."""


class RepresentationCollision(EnumerationError):
    """Two admissible representations produce the same value."""

    def __init__(self, value: Any, representations: Sequence[Tuple[int, ...]]):
        self.value = value
        self.representations = list(representations)
        super().__init__(
            f"value {value} has {len(self.representations)} admissible "
            f"representations: {self.representations}"
        )


class TruncationTooLarge(EnumerationError):
    """An enumeration or expansion exceeded the configured max_terms."""


class SeriesError(PoincareSeriesError):
    pass


class BoundMismatch(SeriesError):
    """Two series truncated at different bounds cannot be compared."""


# -- spec files -----------------------------------------------------------------


class SpecFileError(PoincareSeriesError):
    pass


class ParseError(SpecFileError):
    """Malformed spec file; the position is reported when it is known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line}, column {column}: {message}")


class UnknownKey(SpecFileError):
    pass


class QsPiecesConflict(SpecFileError):
    pass
