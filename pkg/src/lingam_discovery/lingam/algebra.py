from __future__ import annotations

import numpy as np

from ..errors import InvalidDataError, SingularStructureError
from ..models import ConnectionMatrix, UnmixingMatrix


def _as_array(w: UnmixingMatrix | np.ndarray) -> np.ndarray:
    return w.w if isinstance(w, UnmixingMatrix) else np.asarray(w, dtype=float)


def normalize_rows(w_tilde: UnmixingMatrix | np.ndarray) -> UnmixingMatrix:
    """Divide each row by its diagonal entry so the diagonal is exactly one."""
    a = _as_array(w_tilde)
    diag = np.diag(a).copy()
    zero = np.flatnonzero(diag == 0.0)
    if zero.size:
        raise SingularStructureError(f"Zero diagonal entries at rows {zero.tolist()} cannot be normalised")
    out = a / diag[:, None]
    np.fill_diagonal(out, 1.0)
    return UnmixingMatrix(w=out)


def compute_b(
    w_tilde_prime: UnmixingMatrix | np.ndarray, variable_names: tuple[str, ...] = ()
) -> ConnectionMatrix:
    """B = I - W~'."""
    a = _as_array(w_tilde_prime)
    if np.any(np.diag(a) != 1.0):
        raise InvalidDataError("compute_b expects a row-normalised matrix with unit diagonal")
    b = np.eye(a.shape[0]) - a
    np.fill_diagonal(b, 0.0)
    return ConnectionMatrix(b=b, variable_names=variable_names)


def recover_constants(b_hat: ConnectionMatrix, row_means: np.ndarray) -> np.ndarray:
    """
    c = (I - B) mean(x). Exact when the disturbances have zero mean; any
    disturbance offset is absorbed into c.
    """
    means = np.asarray(row_means, dtype=float)
    return (np.eye(b_hat.n) - b_hat.b) @ means
