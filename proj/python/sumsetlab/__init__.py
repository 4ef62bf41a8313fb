"""Exact computation of iterated sumsets NA in Z^d.

Thin wrapper over the C++ core: growth tables and Khovanskii polynomials
(three pipelines), structure-identity verification, exceptional sets,
B-minimal systems, Davenport-type constants, and the bounded
linear-algebra solvers.
"""

from ._sumsetlab import (  # noqa: F401
    BoundViolationError,
    BudgetError,
    UsageError,
    b_minimal,
    bounded_kernel_basis,
    caratheodory_cover,
    cone_normals,
    convex_hull,
    davenport_constant,
    exceptional_set,
    fit_growth,
    growth_table,
    hermite_normal_form,
    is_simplex,
    k_constant,
    khovanskii_general,
    khovanskii_simplex,
    khovanskii_thresholds,
    lattice_contains,
    min_rep_length,
    minimal_positive_solutions,
    minimal_useless,
    minmax_identity,
    normalized_volume,
    polytope_lattice_points,
    positive_solution,
    psa_membership,
    quotient_invariants,
    rhs_structure_set,
    set_budget,
    small_kernel_vector,
    structure_onset,
    structure_thresholds,
    sumset,
    verify_structure,
    width,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
