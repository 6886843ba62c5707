DEFAULT_CONFIG = {
    # Continued-fraction convention for spec files that do not declare one
    "cf_convention": "plus",
    # Reporting
    "mismatch_limit": 5,
    # Safety cap on terms held by one enumeration or expansion
    "max_terms": 200_000,
    # CLI logging level when --verbose is absent
    "log_level": "WARNING",
}
