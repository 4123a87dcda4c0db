"""
Symmetric FastICA (fixed-point iteration on whitened data).

Components are returned with unit variance; rows of the unmixing matrix are
sign-normalised so that each row's largest-magnitude entry is positive.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import linalg, stats

from ..config.schema import IcaConfig
from ..errors import ConvergenceError
from ..models import DataMatrix, IcaReport, UnmixingMatrix
from .whitening import center, whiten

logger = logging.getLogger(__name__)

Array = np.ndarray


@dataclass(frozen=True, slots=True)
class _Contrast:
    G: Callable[[Array], Array]
    g: Callable[[Array], Array]
    g_prime: Callable[[Array], Array]
    gaussian_mean: float  # E[G(nu)] for standard gaussian nu


def _logcosh(u: Array) -> Array:
    return np.logaddexp(u, -u) - np.log(2.0)


def _tanh_prime(u: Array) -> Array:
    t = np.tanh(u)
    return 1.0 - t * t


CONTRASTS: dict[str, _Contrast] = {
    "logcosh": _Contrast(G=_logcosh, g=np.tanh, g_prime=_tanh_prime, gaussian_mean=0.37456720749),
    "cubic": _Contrast(
        G=lambda u: u**4 / 4.0,
        g=lambda u: u**3,
        g_prime=lambda u: 3.0 * u**2,
        gaussian_mean=0.75,
    ),
}


@dataclass(slots=True)
class _RestartOutcome:
    w: Array
    iterations: int
    residual: float
    converged: bool
    contrast: float


def _random_orthogonal(n: int, rng: np.random.Generator) -> Array:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def _symmetric_decorrelation(w: Array) -> Array:
    """W <- (W W^T)^(-1/2) W."""
    s, u = linalg.eigh(w @ w.T)
    return (u * (1.0 / np.sqrt(s))) @ u.T @ w


def _contrast_value(contrast: _Contrast, y: Array) -> float:
    return float(np.sum((contrast.G(y).mean(axis=1) - contrast.gaussian_mean) ** 2))


def _run_restart(z: Array, contrast: _Contrast, config: IcaConfig, rng: np.random.Generator) -> _RestartOutcome:
    n, m = z.shape
    w = _random_orthogonal(n, rng)
    residual = np.inf
    for it in range(1, config.max_iterations + 1):
        y = w @ z
        w_new = (contrast.g(y) @ z.T) / m - contrast.g_prime(y).mean(axis=1)[:, None] * w
        w_new = _symmetric_decorrelation(w_new)
        residual = float(np.max(np.abs(np.abs(np.einsum("ij,ij->i", w_new, w)) - 1.0)))
        w = w_new
        if residual < config.tolerance:
            return _RestartOutcome(w, it, residual, True, _contrast_value(contrast, w @ z))
    return _RestartOutcome(w, config.max_iterations, residual, False, _contrast_value(contrast, w @ z))


def _sign_normalise(w: Array) -> Array:
    idx = np.argmax(np.abs(w), axis=1)
    signs = np.sign(w[np.arange(w.shape[0]), idx])
    signs[signs == 0] = 1.0
    return w * signs[:, None]


def nongaussianity(components: Array) -> Array:
    """Per-row m * (skew^2 / 6 + excess_kurtosis^2 / 24); ~chi-square(2) for gaussian rows."""
    m = components.shape[1]
    skew = stats.skew(components, axis=1)
    kurt = stats.kurtosis(components, axis=1, fisher=True)
    return m * (skew**2 / 6.0 + kurt**2 / 24.0)


def fast_ica(data: DataMatrix, config: IcaConfig | None = None) -> tuple[UnmixingMatrix, IcaReport]:
    """
    Estimate W such that the rows of W @ X_centered are unit-variance, mutually
    uncorrelated and maximally non-gaussian under the configured contrast.

    Every restart starts from a random orthogonal matrix drawn from its own
    sub-seed (seed, restart index); the converged restart with the largest
    contrast value wins. Raises ConvergenceError (carrying the best-effort W)
    when no restart converges.
    """
    config = config or IcaConfig()
    contrast = CONTRASTS[config.contrast]

    centered, _ = center(data)
    white, transform = whiten(centered)
    z = white.values

    outcomes: list[_RestartOutcome] = []
    for restart in range(config.restarts):
        rng = np.random.default_rng(np.random.SeedSequence([config.seed, restart]))
        outcome = _run_restart(z, contrast, config, rng)
        if not outcome.converged:
            logger.info(
                "FastICA restart %d did not converge (residual %.3g after %d iterations)",
                restart,
                outcome.residual,
                outcome.iterations,
            )
        outcomes.append(outcome)

    converged = [i for i, o in enumerate(outcomes) if o.converged]
    pool = converged or list(range(len(outcomes)))
    chosen = max(pool, key=lambda i: (outcomes[i].contrast, -i))

    w = _sign_normalise(outcomes[chosen].w @ transform.matrix)
    components = w @ centered.values
    stat = nongaussianity(components)
    unreliable = data.n > 1 and bool(np.min(stat) < config.gaussianity_threshold)
    if unreliable:
        logger.warning(
            "Estimated components are close to gaussian (min statistic %.3g < %.3g); "
            "the unmixing matrix is not identifiable from this data",
            float(np.min(stat)),
            config.gaussianity_threshold,
        )

    report = IcaReport(
        converged=bool(converged),
        chosen_restart=chosen,
        iterations=tuple(o.iterations for o in outcomes),
        residuals=tuple(o.residual for o in outcomes),
        contrast_values=tuple(o.contrast for o in outcomes),
        restart_converged=tuple(o.converged for o in outcomes),
        nongaussianity=tuple(float(s) for s in stat),
        unreliable=unreliable,
        contrast=config.contrast,
        max_iterations=config.max_iterations,
        tolerance=config.tolerance,
    )
    unmixing = UnmixingMatrix(w=w)
    if not converged:
        raise ConvergenceError(unmixing, report)
    return unmixing, report
