"""
Permutation searches: the diagonal-maximising row permutation and the causal order.
"""

from .assignment import assignment_cost, hungarian_solve
from .search import (
    apply_order_mask,
    causal_order_search,
    diag_permutation_assignment,
    diag_permutation_exhaustive,
    diagonal_objective,
    greedy_causal_order,
    triangularity_score,
    upper_mass,
)

__all__ = [
    "hungarian_solve",
    "assignment_cost",
    "diag_permutation_exhaustive",
    "diag_permutation_assignment",
    "diagonal_objective",
    "causal_order_search",
    "greedy_causal_order",
    "triangularity_score",
    "upper_mass",
    "apply_order_mask",
]
