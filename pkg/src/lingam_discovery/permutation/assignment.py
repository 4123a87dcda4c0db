from __future__ import annotations

import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..errors import InfeasibleAssignmentError, InvalidDataError


def assignment_cost(cost: np.ndarray, assignment: tuple[int, ...] | list[int]) -> float:
    """Correctly rounded total cost of assigning row i to column assignment[i]."""
    return math.fsum(float(cost[i, j]) for i, j in enumerate(assignment))


def _solve(cost: np.ndarray) -> list[int] | None:
    if cost.shape[0] == 0:
        return []
    try:
        rows, cols = linear_sum_assignment(cost)
    except ValueError:
        # scipy reports "cost matrix is infeasible" when every perfect matching hits +inf
        return None
    out = [0] * cost.shape[0]
    for r, c in zip(rows, cols):
        out[int(r)] = int(c)
    return out


def hungarian_solve(cost: np.ndarray) -> tuple[int, ...]:
    """
    Minimum-cost perfect assignment; result[i] is the column assigned to row i.

    +inf marks a forbidden pair. Among assignments of equal total cost the
    lexicographically smallest is returned: after the solver's optimum, each
    position is re-tried with smaller free columns and the remaining rows
    re-solved, keeping any candidate that does not increase the total.
    """
    c = np.array(cost, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise InvalidDataError(f"Cost matrix must be square, got shape {c.shape}")
    if np.any(np.isnan(c)) or np.any(c == -np.inf):
        raise InvalidDataError("Cost matrix entries must be real numbers or +inf")

    n = c.shape[0]
    best = _solve(c)
    if best is None or not math.isfinite(assignment_cost(c, best)):
        raise InfeasibleAssignmentError(c.shape)
    best_cost = assignment_cost(c, best)

    for i in range(n):
        prefix = best[:i]
        used = set(prefix)
        for col in range(best[i]):
            if col in used or not math.isfinite(c[i, col]):
                continue
            rest_rows = list(range(i + 1, n))
            rest_cols = [j for j in range(n) if j not in used and j != col]
            sub = _solve(c[np.ix_(rest_rows, rest_cols)])
            if sub is None:
                continue
            candidate = prefix + [col] + [rest_cols[k] for k in sub]
            total = assignment_cost(c, candidate)
            if total <= best_cost:
                best, best_cost = candidate, total
                break

    return tuple(best)
