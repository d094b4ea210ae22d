"""Numerical univalence criteria for meromorphic functions on |z| > 1.

Functions are given in the same text form as on the command line, for
example ``"joukowski:0.4"`` or ``"laurent:1;0;0.5"``.
"""

from ._univalence import (
    UnivalenceError,
    canonical_function,
    chain_eval,
    chain_w,
    criterion_lhs,
    derivatives,
    estimate_sup,
    evaluate,
    extract_a1,
    injectivity_scan,
    pre_schwarzian,
    run_cli,
    schwarzian,
    winding_number,
)

__all__ = [
    "UnivalenceError",
    "canonical_function",
    "chain_eval",
    "chain_w",
    "criterion_lhs",
    "derivatives",
    "estimate_sup",
    "evaluate",
    "extract_a1",
    "injectivity_scan",
    "pre_schwarzian",
    "run_cli",
    "schwarzian",
    "winding_number",
]
