"""Möbius sums of h_k, the functionals Lambda^(s), and weight-family classification."""

from ._core import (
    ConditionError,
    DomainError,
    MobiusTable,
    PoleError,
    __version__,
    approx_reciprocal_s,
    classify,
    divisor_counts,
    f_k,
    g_k,
    hk_coeffs,
    hp_norm_estimate,
    ims_hk_coeffs,
    lambda_apply,
    lq_norm,
    mellin_step_pk,
    mobius_logsum_over_k,
    mobius_partial_sum_ims,
    mobius_sum_over_k,
    rm_sequence,
    run_manifest,
    table1,
    zeta,
)

__all__ = [
    "ConditionError",
    "DomainError",
    "MobiusTable",
    "PoleError",
    "__version__",
    "approx_reciprocal_s",
    "classify",
    "divisor_counts",
    "f_k",
    "g_k",
    "hk_coeffs",
    "hp_norm_estimate",
    "ims_hk_coeffs",
    "lambda_apply",
    "lq_norm",
    "mellin_step_pk",
    "mobius_logsum_over_k",
    "mobius_partial_sum_ims",
    "mobius_sum_over_k",
    "rm_sequence",
    "run_manifest",
    "table1",
    "zeta",
]
