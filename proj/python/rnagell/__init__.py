"""Exact solver and verification kit for x^2 + D = 2^s * p1^k * p2^l, s in {0, 2}."""

from ._core import (
    Instance,
    Solution,
    as_square,
    budget,
    check_all_gaps,
    choose_approximant,
    constants,
    enumerate_smooth,
    fraction,
    g_at_1,
    grand_total,
    isqrt,
    lambda_diagnostic,
    membership,
    pade_build,
    partition,
    quarter_class,
    roots_of_x2_plus_d,
    search_run,
    smallest_solution,
    solve,
    sqrt_mod_prime_power,
    squarefree_part,
    strong_gap,
    strong_gap_map,
    verify_inequality_a,
    verify_monotonic_c,
    weak_gap_map,
    weak_gap_pair,
    weak_gap_triple,
    wronskian_e,
)

__all__ = [
    "Instance",
    "Solution",
    "as_square",
    "budget",
    "check_all_gaps",
    "choose_approximant",
    "constants",
    "enumerate_smooth",
    "fraction",
    "g_at_1",
    "grand_total",
    "isqrt",
    "lambda_diagnostic",
    "membership",
    "pade_build",
    "partition",
    "quarter_class",
    "roots_of_x2_plus_d",
    "search_run",
    "smallest_solution",
    "solve",
    "sqrt_mod_prime_power",
    "squarefree_part",
    "strong_gap",
    "strong_gap_map",
    "verify_inequality_a",
    "verify_monotonic_c",
    "weak_gap_map",
    "weak_gap_pair",
    "weak_gap_triple",
    "wronskian_e",
]

__version__ = "0.1.0"
