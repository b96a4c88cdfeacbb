"""Optimal component test plans for coherent systems.

Thin wrapper over the C++ core; exact values come back as
``fractions.Fraction``.
"""

from ._core import (
    CutplanError,
    CutsetMatrix,
    FractionPlan,
    IntegerPlan,
    brute_force_n_min,
    confidence_bound,
    cutset_n_min,
    find_n_zero,
    integer_plan,
    load_document,
    minimal_cutsets_from_truth_table,
    minimal_pathsets,
    optimize_fractions,
    run_cli,
    shortest_path_length,
    solve_lp,
)

__all__ = [
    "CutplanError",
    "CutsetMatrix",
    "FractionPlan",
    "IntegerPlan",
    "brute_force_n_min",
    "confidence_bound",
    "cutset_n_min",
    "find_n_zero",
    "integer_plan",
    "load_document",
    "minimal_cutsets_from_truth_table",
    "minimal_pathsets",
    "optimize_fractions",
    "run_cli",
    "shortest_path_length",
    "solve_lp",
]
