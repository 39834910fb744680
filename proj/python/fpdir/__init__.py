"""Directions determined by [n]^2 in F_p^2 and the counts behind them."""

from fpdir._core import (
    breakdown_terms,
    coprime_pairs,
    count_bruteforce,
    count_congruence,
    count_fast,
    density,
    density_curve,
    dilog,
    directions_fp_bruteforce,
    directions_fp_fast,
    directions_q,
    discrepancy_exact,
    erdos_turan_bound,
    inverse_sequence,
    is_prime,
    kloosterman_incomplete,
    mod_inverse,
    next_prime_at_least,
    oracle_moments,
    parity_moments,
    per_pair_solution,
    predict,
    reduced_residue_fracsum,
    bernoulli_identity_check,
    run_suite,
    small_solution_pairs,
    solution_pairs,
    verify_ac_conclusion,
)

__all__ = [name for name in dir() if not name.startswith("_")]
