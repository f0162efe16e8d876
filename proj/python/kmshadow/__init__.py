"""Exact k-binomial representations, Kruskal-Macaulay and Kruskal-Katona
shadow functions, lexicographic prefix families, and verification checks.

All numeric arguments and results are native Python ints at arbitrary
precision; family members are lists of ints.
"""

from ._core import (
    BudgetError,
    VerificationFailure,
    __version__,
    binomial,
    check_eckhoff_wegner,
    check_main_inequality,
    decompose,
    enumerate_prefix,
    extended_decompose,
    is_short,
    kruskal_katona,
    kruskal_macaulay,
    max_translates,
    shadow,
    sharpness_witness,
    sweep_main_inequality,
    value,
)

__all__ = [
    "BudgetError",
    "VerificationFailure",
    "__version__",
    "binomial",
    "check_eckhoff_wegner",
    "check_main_inequality",
    "decompose",
    "enumerate_prefix",
    "extended_decompose",
    "is_short",
    "kruskal_katona",
    "kruskal_macaulay",
    "max_translates",
    "shadow",
    "sharpness_witness",
    "sweep_main_inequality",
    "value",
]
