from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..config.schema import PruneConfig
from ..errors import BootstrapInstabilityError, DegenerateDataError, InvalidDataError
from ..ica.whitening import sample_covariance
from ..models import CausalOrder, ConnectionMatrix, DataMatrix, EdgeVerdict, PruneReport
from .regression import ols_from_covariance

logger = logging.getLogger(__name__)


def edge_verdicts(
    means: np.ndarray, stds: np.ndarray, order: CausalOrder, z_threshold: float
) -> tuple[tuple[EdgeVerdict, ...], ...]:
    """
    forced-zero on the diagonal and wherever the order forbids an edge;
    otherwise kept iff |mean| > z * std (so std 0 keeps any nonzero mean).
    """
    allowed = order.precedes_mask()
    n = means.shape[0]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if not allowed[i, j]:
                row.append(EdgeVerdict.FORCED_ZERO)
            elif abs(means[i, j]) > z_threshold * stds[i, j]:
                row.append(EdgeVerdict.KEPT)
            else:
                row.append(EdgeVerdict.PRUNED)
        rows.append(tuple(row))
    return tuple(rows)


def _resample(values: np.ndarray, order: CausalOrder, names: tuple[str, ...], seed: int, k: int) -> np.ndarray | None:
    m = values.shape[1]
    rng = np.random.default_rng(np.random.SeedSequence([seed, k]))
    sample = values[:, rng.integers(0, m, size=m)]
    sample = sample - sample.mean(axis=1, keepdims=True)
    try:
        return ols_from_covariance(sample_covariance(sample), order.order, names)
    except DegenerateDataError as e:
        logger.info("Bootstrap resample %d failed: %s", k, e)
        return None


def bootstrap_prune(x: DataMatrix, order: CausalOrder, config: PruneConfig | None = None) -> PruneReport:
    """
    Re-estimate B over bootstrap resamples of whole samples (columns of X) and
    keep the edges whose mean is large relative to their standard deviation.
    Resample k draws its indices from the sub-seed (seed, k).
    """
    config = config or PruneConfig()
    if order.n != x.n:
        raise InvalidDataError(f"Causal order covers {order.n} variables, data has {x.n}")

    def run(k: int) -> np.ndarray | None:
        return _resample(x.values, order, x.variable_names, config.seed, k)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            estimates = list(pool.map(run, range(config.resamples)))
    else:
        estimates = [run(k) for k in range(config.resamples)]

    ok = [b for b in estimates if b is not None]
    failures = config.resamples - len(ok)
    if failures > config.max_failure_fraction * config.resamples or len(ok) < 2:
        raise BootstrapInstabilityError(failures, config.resamples)

    stack = np.stack(ok)
    means = stack.mean(axis=0)
    stds = stack.std(axis=0, ddof=1)
    verdicts = edge_verdicts(means, stds, order, config.z_threshold)
    kept = np.where(np.array([[v == EdgeVerdict.KEPT for v in row] for row in verdicts]), means, 0.0)

    return PruneReport(
        kept=ConnectionMatrix(b=kept, variable_names=x.variable_names),
        edge_means=means,
        edge_stds=stds,
        verdicts=verdicts,
        causal_order=order,
        failures=failures,
    )
