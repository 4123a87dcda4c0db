from __future__ import annotations

import numpy as np

from ..config.schema import DiagnosticsConfig
from ..errors import DegenerateDataError, Diagnostic, InvalidDataError
from ..models import CausalOrder, ConnectionMatrix, DataMatrix, DiagnosticsReport, IcaReport, LingamResult
from ..permutation.search import triangularity_score

DEGENERATE_STD = 1e-12


def _standardise(values: np.ndarray) -> np.ndarray:
    centered = values - values.mean(axis=1, keepdims=True)
    std = centered.std(axis=1)
    out = np.zeros_like(centered)
    ok = std > DEGENERATE_STD * max(1.0, float(np.abs(values).max(initial=0.0)))
    out[ok] = centered[ok] / std[ok, None]
    return out


def independence_score(components: DataMatrix | np.ndarray) -> np.ndarray:
    """
    Nonlinear-correlation surrogate for pairwise independence of components.

    Entry (i, j) is the largest of |corr(s_i, s_j^2)|, |corr(s_i^2, s_j)| and
    |corr(s_i^2, s_j^2)| computed on standardised rows and standardised squares.
    Linear correlations are not used: ICA forces them to zero.
    """
    if isinstance(components, DataMatrix):
        values, names = components.values, components.variable_names
    else:
        values = np.asarray(components, dtype=float)
        names = tuple(f"s{i + 1}" for i in range(values.shape[0]))
    n, m = values.shape

    std = values.std(axis=1)
    flat = np.flatnonzero(std <= DEGENERATE_STD * max(1.0, float(np.abs(values).max(initial=0.0))))
    if flat.size:
        raise DegenerateDataError(
            f"Component {names[int(flat[0])]!r} is constant; independence is undefined",
            variable=names[int(flat[0])],
        )
    if n == 1:
        return np.zeros((1, 1))

    z = _standardise(values)
    sq = _standardise(z**2)  # binary components have constant squares: those correlations are 0

    cross = np.abs(z @ sq.T) / m
    both = np.abs(sq @ sq.T) / m
    both = (both + both.T) / 2.0
    score = np.maximum(np.maximum(cross, cross.T), both)
    np.fill_diagonal(score, 0.0)
    return np.clip(score, 0.0, 1.0)


def build_report(
    b_hat: ConnectionMatrix,
    order: CausalOrder,
    components: DataMatrix | None,
    *,
    ica_report: IcaReport | None = None,
    config: DiagnosticsConfig | None = None,
) -> DiagnosticsReport:
    config = config or DiagnosticsConfig()
    residual = triangularity_score(b_hat, order)
    if components is not None:
        independence = independence_score(components)
    else:
        independence = np.zeros((b_hat.n, b_hat.n))

    warnings: list[Diagnostic] = []
    if residual > config.triangularity_threshold:
        warnings.append(
            Diagnostic(
                label="triangularity",
                message=(
                    f"Estimated connection matrix is far from triangular under the best causal order "
                    f"(normalised residual {residual:.4f}); model assumptions are likely violated"
                ),
                value=residual,
                threshold=config.triangularity_threshold,
            )
        )

    worst = float(independence.max(initial=0.0))
    if worst > config.independence_threshold:
        i, j = np.unravel_index(int(np.argmax(independence)), independence.shape)
        warnings.append(
            Diagnostic(
                label="independence",
                message=(
                    f"Estimated components {int(i)} and {int(j)} are not independent "
                    f"(nonlinear correlation {worst:.4f})"
                ),
                value=worst,
                threshold=config.independence_threshold,
            )
        )

    if ica_report is not None and ica_report.unreliable:
        weakest = min(ica_report.nongaussianity)
        warnings.append(
            Diagnostic(
                label="ica",
                message="Estimated components are close to gaussian; the ICA estimate is unreliable",
                value=weakest,
            )
        )

    return DiagnosticsReport(
        triangularity_residual=residual,
        independence_matrix=independence,
        warnings=tuple(warnings),
    )


def assumption_report(
    result: LingamResult,
    components: DataMatrix | None,
    config: DiagnosticsConfig | None = None,
) -> DiagnosticsReport:
    """Triangularity and independence checks on a finished estimate (advisory only)."""
    if components is not None and components.n != result.n:
        raise InvalidDataError(f"Components have {components.n} rows, result has {result.n} variables")
    return build_report(
        result.b_hat,
        result.causal_order,
        components,
        ica_report=result.ica_report,
        config=config,
    )
