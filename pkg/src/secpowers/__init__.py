"""Exact and randomized dimension counts for secant varieties of powers of forms."""
from .combinatorics import MultiIndex, N_d, binom, enumerate_monomials
from .engine import (DimensionReport, LinearSystemSpec, Verdict, certify_main_theorem,
                     compute_dimension, expected_dimension, main_bound)
from .modlinalg import DEFAULT_PRIME, PrimeField, rank
from .secant import cross_check, identifiability_bound, secant_dimension

__all__ = [
    "MultiIndex", "N_d", "binom", "enumerate_monomials",
    "DimensionReport", "LinearSystemSpec", "Verdict", "certify_main_theorem",
    "compute_dimension", "expected_dimension", "main_bound",
    "DEFAULT_PRIME", "PrimeField", "rank",
    "cross_check", "identifiability_bound", "secant_dimension",
]
