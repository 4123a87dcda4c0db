from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from functools import lru_cache

import numpy as np

from ..config.schema import SearchConfig
from ..errors import InvalidDataError, SearchLimitError, SingularStructureError
from ..models import CausalOrder, ConnectionMatrix, RowPermutation, UnmixingMatrix
from .assignment import hungarian_solve

MatrixLike = UnmixingMatrix | ConnectionMatrix | np.ndarray

CHUNK = 40320  # 8!
NEAR_TIE = 1e-9


def _matrix(x: MatrixLike) -> np.ndarray:
    if isinstance(x, UnmixingMatrix):
        a = x.w
    elif isinstance(x, ConnectionMatrix):
        a = x.b
    else:
        a = np.asarray(x, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InvalidDataError(f"Expected a non-empty square matrix, got shape {a.shape}")
    return a


@lru_cache(maxsize=None)
def _cached_permutations(n: int) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    perms.setflags(write=False)
    return perms


def _permutation_chunks(n: int) -> Iterator[np.ndarray]:
    """All n! permutations in lexicographic order, in blocks."""
    if math.factorial(n) <= CHUNK:
        yield _cached_permutations(n)
        return
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.intp)


def _near_minimal(totals: np.ndarray) -> np.ndarray:
    lo = totals.min()
    if not math.isfinite(lo):
        return np.empty(0, dtype=np.intp)
    return np.flatnonzero(totals <= lo * (1.0 + NEAR_TIE))


def _diag_costs(a: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return 1.0 / np.abs(a)


# ---------------------------------------------------------------------------
# step 2: row permutation maximising the diagonal
# ---------------------------------------------------------------------------


def diagonal_objective(w: MatrixLike, mapping: tuple[int, ...] | list[int]) -> float:
    """sum_i 1/|w[mapping[i]][i]|, exact zeros contributing +inf."""
    cost = _diag_costs(_matrix(w))
    return math.fsum(float(cost[r, i]) for i, r in enumerate(mapping))


def diag_permutation_exhaustive(w: MatrixLike, *, limit: int = 8) -> RowPermutation:
    a = _matrix(w)
    n = a.shape[0]
    if n > limit:
        raise SearchLimitError(n, limit, "use diag_permutation_assignment for larger matrices")

    cost = _diag_costs(a)
    cols = np.arange(n)
    best: tuple[int, ...] | None = None
    best_cost = math.inf
    for perms in _permutation_chunks(n):
        totals = cost[perms, cols].sum(axis=1)
        for k in _near_minimal(totals):
            mapping = tuple(int(r) for r in perms[k])
            exact = diagonal_objective(a, mapping)
            if exact < best_cost:
                best, best_cost = mapping, exact

    if best is None:
        raise SingularStructureError("Every row permutation leaves a zero on the diagonal")
    return RowPermutation(mapping=best, objective_value=best_cost)


def diag_permutation_assignment(w: MatrixLike) -> RowPermutation:
    """
    Same objective as the exhaustive search, solved as a linear assignment:
    position i (a column of W) is assigned the row r with cost 1/|w[r][i]|.
    """
    a = _matrix(w)
    mapping = hungarian_solve(_diag_costs(a).T)
    return RowPermutation(mapping=mapping, objective_value=diagonal_objective(a, mapping))


# ---------------------------------------------------------------------------
# step 5: simultaneous row/column permutation closest to strictly lower triangular
# ---------------------------------------------------------------------------


def upper_mass(b: MatrixLike, order: tuple[int, ...] | list[int]) -> float:
    """sum over p <= q of (P B P^T)[p][q]^2 where row p of P B P^T is variable order[p]."""
    a = _matrix(b)
    idx = list(order)
    permuted = a[np.ix_(idx, idx)]
    return math.fsum(float(v) for v in (np.triu(permuted) ** 2).ravel())


def _exhaustive_order(a: np.ndarray) -> CausalOrder:
    n = a.shape[0]
    sq = a**2
    best: tuple[int, ...] | None = None
    best_mass = math.inf
    for perms in _permutation_chunks(n):
        pos = np.argsort(perms, axis=1)
        upper = pos[:, :, None] <= pos[:, None, :]
        totals = (upper * sq).sum(axis=(1, 2))
        for k in _near_minimal(totals):
            order = tuple(int(v) for v in perms[k])
            exact = upper_mass(a, order)
            if exact < best_mass:
                best, best_mass = order, exact
            if best_mass == 0.0:
                # nothing beats zero and later candidates are lexicographically larger
                return CausalOrder(order=best, residual=0.0)
    assert best is not None
    return CausalOrder(order=best, residual=best_mass)


def greedy_causal_order(b: MatrixLike) -> CausalOrder:
    """
    Approximate step-5 search: repeatedly place next the variable whose squared
    coefficients on the not-yet-ordered variables sum smallest (lowest index on ties).
    """
    a = _matrix(b)
    sq = a**2
    remaining = list(range(a.shape[0]))
    order: list[int] = []
    while remaining:
        scores = [math.fsum(float(sq[v, j]) for j in remaining if j != v) for v in remaining]
        pick = remaining[int(np.argmin(scores))]
        order.append(pick)
        remaining.remove(pick)
    return CausalOrder(order=tuple(order), residual=upper_mass(a, order), approximate=True)


def causal_order_search(b_hat: MatrixLike, config: SearchConfig | None = None) -> CausalOrder:
    """
    Exact search over all n! simultaneous permutations for n up to the
    configured limit; above it, the greedy search only when explicitly allowed.
    """
    config = config or SearchConfig()
    a = _matrix(b_hat)
    n = a.shape[0]
    if n > config.exhaustive_limit:
        if config.allow_greedy:
            return greedy_causal_order(a)
        raise SearchLimitError(
            n, config.exhaustive_limit, "enable the greedy causal-order search (allow_greedy / --greedy)"
        )
    return _exhaustive_order(a)


def triangularity_score(b: MatrixLike, order: CausalOrder) -> float:
    """Share of squared mass on or above the diagonal under the order (0 = strictly lower)."""
    a = _matrix(b)
    if len(order.order) != a.shape[0]:
        raise InvalidDataError(f"Order of length {len(order.order)} does not match {a.shape[0]} variables")
    total = math.fsum(float(v) for v in (a**2).ravel())
    if total == 0.0:
        return 0.0
    return upper_mass(a, order.order) / total


def apply_order_mask(b: MatrixLike, order: CausalOrder) -> np.ndarray:
    """Zero every coefficient the causal order implies is zero."""
    a = _matrix(b)
    return np.where(order.precedes_mask(), a, 0.0)
