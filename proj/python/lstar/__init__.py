"""Exact invariants of local Ehrhart theory.

Lattice polytopes with exact integer arithmetic: h*-vectors, local
h*-vectors and Hodge vectors, the 3D h*-diamond, Cayley polytopes and
free joins, mixed volumes, Gale transforms and Lawrence twists, circuits
and their hypergeometric coefficient formula.
"""

from ._lstar import (
    BudgetError,
    Polytope,
    alphas_betas,
    bernstein_zero,
    cayley,
    cgf_local_hstar,
    circuit,
    counting_budget,
    cross_polytope,
    cube,
    free_join,
    gale_inverse,
    gale_transform,
    is_spanning,
    lawrence_twist,
    minkowski_sum,
    mixed_volume,
    pyramid,
    run_scenario,
    scenario_names,
    segment,
    set_counting_budget,
    simplex,
    sN_simplex,
)

__all__ = [
    "BudgetError",
    "Polytope",
    "alphas_betas",
    "bernstein_zero",
    "cayley",
    "cgf_local_hstar",
    "circuit",
    "counting_budget",
    "cross_polytope",
    "cube",
    "free_join",
    "gale_inverse",
    "gale_transform",
    "is_spanning",
    "lawrence_twist",
    "minkowski_sum",
    "mixed_volume",
    "pyramid",
    "run_scenario",
    "scenario_names",
    "segment",
    "set_counting_budget",
    "simplex",
    "sN_simplex",
]
