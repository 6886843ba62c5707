from .spec import (
    Box,
    Representation,
    Scalar,
    TruncationBound,
    ValuationSpec,
    check_bound,
    derive_qs,
    is_admissible,
    spec_violations,
    validate_spec,
    within_bound,
)
from .enumeration import (
    UniquenessReport,
    UniquenessViolation,
    brute_force_oracle,
    certify_truncation,
    enumerate_values,
    represent,
    verify_uniqueness,
)

__all__ = [
    # Specs
    "ValuationSpec",
    "Representation",
    "Scalar",
    "Box",
    "TruncationBound",
    "validate_spec",
    "spec_violations",
    "check_bound",
    "within_bound",
    "derive_qs",
    "is_admissible",
    # Enumeration
    "enumerate_values",
    "brute_force_oracle",
    "verify_uniqueness",
    "represent",
    "certify_truncation",
    "UniquenessReport",
    "UniquenessViolation",
]
