"""Exact Dedekind sums and reciprocity identity residuals."""

from ._core import (
    DedekindError,
    admissible_witness,
    classical_fact_residual,
    corollary2_residual,
    dedekind_sum,
    du_zhang_residual,
    egcd,
    factorize,
    girstmair_th4_residual,
    is_admissible,
    mod_inverse,
    normalized_sum,
    reciprocity_residual,
    sawtooth,
    scan,
    sqrt_minus_one,
    theorem1_instances,
    theorem1_residual,
    three_term_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
