from __future__ import annotations

import numpy as np
from scipy import linalg

from ..errors import DegenerateDataError, InvalidDataError
from ..ica.whitening import sample_covariance
from ..models import CausalOrder, ConnectionMatrix, DataMatrix

RANK_TOL = 1e-12


def ols_from_covariance(cov: np.ndarray, order: tuple[int, ...], names: tuple[str, ...]) -> np.ndarray:
    """
    Row v of the result holds the OLS coefficients of v on every variable
    earlier in the order, solved from the covariance block of its predecessors.
    """
    n = cov.shape[0]
    b = np.zeros((n, n))
    for p in range(1, n):
        v = order[p]
        preds = list(order[:p])
        block = cov[np.ix_(preds, preds)]
        eig = linalg.eigvalsh(block)
        if eig[-1] <= 0.0 or eig[0] <= RANK_TOL * eig[-1]:
            raise DegenerateDataError(
                f"Predecessors of {names[v]!r} have a singular covariance; "
                "its connection strengths are not identifiable",
                variable=names[v],
            )
        b[v, preds] = linalg.solve(block, cov[preds, v], assume_a="pos")
    return b


def regress_on_predecessors(x: DataMatrix, order: CausalOrder) -> ConnectionMatrix:
    """Covariance-only re-estimate of B given a causal order."""
    if order.n != x.n:
        raise InvalidDataError(f"Causal order covers {order.n} variables, data has {x.n}")
    centered = x.values - x.values.mean(axis=1, keepdims=True)
    b = ols_from_covariance(sample_covariance(centered), order.order, x.variable_names)
    return ConnectionMatrix(b=b, variable_names=x.variable_names)
