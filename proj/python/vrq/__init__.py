"""Vietoris-Rips complexes of Hamming cubes: Betti numbers and closed forms."""

from ._vrq import (
    SizeBudgetExceeded,
    alpha,
    alpha_partial_sum,
    betti,
    c_n,
    hamming_distance,
    integer_homology,
    kneser_check,
    link_check,
    predicted_betti,
    run_cli,
    simplex_counts,
    splitting_check,
    taylor_coefficient,
)

__all__ = [
    "SizeBudgetExceeded",
    "alpha",
    "alpha_partial_sum",
    "betti",
    "c_n",
    "hamming_distance",
    "integer_homology",
    "kneser_check",
    "link_check",
    "predicted_betti",
    "run_cli",
    "simplex_counts",
    "splitting_check",
    "taylor_coefficient",
]
