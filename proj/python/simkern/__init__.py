"""Exact stratification, principal-minor positivity, and simultaneous
Hadamard-power kernels of Hermitian matrices.

The heavy lifting happens in the C++ extension; matrices cross the boundary
as `Matrix` handles and structured results as plain dicts/lists with exact
scalars encoded as strings ("p/q" rationals, {"re","im"} complex values).
"""

from simkern._core import (
    Error,
    Matrix,
    analyze,
    check_pmp_signature,
    compression,
    distinct_diagonal_check,
    generate,
    hadamard_power,
    hns_decompose,
    is_k_pmp,
    is_k_psrp,
    ker_block_ones,
    pi_min,
    pi_stratum,
    pmp_order,
    positive_combination_kernel,
    principal_minor,
    rank,
    rank_one_certificates,
    rectangular_simultaneous_kernel,
    set_tolerance,
    signature,
    simultaneous_kernel,
    stratum_report,
    theorem_battery,
    verify_t3pmp,
    __version__,
)

__all__ = [
    "Error",
    "Matrix",
    "analyze",
    "check_pmp_signature",
    "compression",
    "distinct_diagonal_check",
    "generate",
    "hadamard_power",
    "hns_decompose",
    "is_k_pmp",
    "is_k_psrp",
    "ker_block_ones",
    "pi_min",
    "pi_stratum",
    "pmp_order",
    "positive_combination_kernel",
    "principal_minor",
    "rank",
    "rank_one_certificates",
    "rectangular_simultaneous_kernel",
    "set_tolerance",
    "signature",
    "simultaneous_kernel",
    "stratum_report",
    "theorem_battery",
    "verify_t3pmp",
    "__version__",
]
