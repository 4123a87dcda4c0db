from __future__ import annotations

import numpy as np
from scipy import linalg

from ..errors import DegenerateDataError
from ..models import CenteringInfo, DataMatrix, WhiteningTransform

RANK_TOL = 1e-12


def center(data: DataMatrix) -> tuple[DataMatrix, CenteringInfo]:
    """Subtract each variable's sample mean; the means are returned for later use."""
    means = data.values.mean(axis=1)
    return data.with_values(data.values - means[:, None]), CenteringInfo(row_means=means)


def sample_covariance(values: np.ndarray) -> np.ndarray:
    """Covariance of already centered rows, normalised by m."""
    m = values.shape[1]
    return (values @ values.T) / m


def whiten(centered: DataMatrix) -> tuple[DataMatrix, WhiteningTransform]:
    """
    Symmetric (ZCA) whitening of centered data: K = E diag(1/sqrt(lambda)) E^T,
    so a diagonal covariance maps to a diagonal transform.
    """
    cov = sample_covariance(centered.values)
    eigvals, eigvecs = linalg.eigh(cov)

    largest = float(eigvals[-1])
    if largest <= 0.0 or float(eigvals[0]) <= RANK_TOL * largest:
        variances = np.diag(cov)
        flat = np.flatnonzero(variances <= RANK_TOL * max(float(variances.max()), 0.0))
        variable = centered.variable_names[int(flat[0])] if flat.size else None
        detail = f" (variable {variable!r} is constant)" if variable else ""
        raise DegenerateDataError(f"Sample covariance is rank deficient{detail}", variable=variable)

    matrix = eigvecs @ np.diag(1.0 / np.sqrt(eigvals)) @ eigvecs.T
    transform = WhiteningTransform(matrix=matrix, eigenvalues=eigvals)
    return centered.with_values(transform.apply(centered.values)), transform
