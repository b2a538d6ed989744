"""Decompositions of 1 into unit fractions with denominators p^a q^b."""

from .bounds import (
    bounds_report,
    construct_p2,
    construction_threshold,
    q_bound_basic,
    q_bound_best,
    q_bound_k,
    residue_bound,
)
from .enumerator import count, enumerate_reduced, enumerate_solutions, exists, find_one
from .model import Params, SolutionGrid, canonical_key, verify
from .numtheory import alpha_cap, sylvester
from .oracle import brute_count, brute_enumerate

__all__ = [
    "Params",
    "SolutionGrid",
    "alpha_cap",
    "bounds_report",
    "brute_count",
    "brute_enumerate",
    "canonical_key",
    "construct_p2",
    "construction_threshold",
    "count",
    "enumerate_reduced",
    "enumerate_solutions",
    "exists",
    "find_one",
    "q_bound_basic",
    "q_bound_best",
    "q_bound_k",
    "residue_bound",
    "sylvester",
    "verify",
]
