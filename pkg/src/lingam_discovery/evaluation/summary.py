from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import stats

from .records import ScatterRecord

SUMMARY_COLUMNS = [
    "n",
    "m",
    "trials",
    "failures",
    "slope",
    "r2",
    "max_abs_error",
    "order_accuracy",
    "unreliable",
]


@dataclass(frozen=True, slots=True)
class CellSummary:
    n: int
    m: int
    trials: int
    failures: int
    slope: float
    r2: float
    max_abs_error: float
    order_accuracy: float
    unreliable: bool

    def to_row(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in SUMMARY_COLUMNS}


def scatter_fit(records: Sequence[ScatterRecord]) -> tuple[float, float]:
    """Least-squares slope and R^2 of b_est on b_true; nan when undefined."""
    if len(records) < 2:
        return math.nan, math.nan
    x = np.array([r.b_true for r in records])
    y = np.array([r.b_est for r in records])
    if np.ptp(x) == 0.0:
        return math.nan, math.nan
    fit = stats.linregress(x, y)
    return float(fit.slope), float(fit.rvalue**2)


def summarize_cell(
    n: int,
    m: int,
    records: Sequence[ScatterRecord],
    *,
    trials: int,
    failures: int,
    correct_orders: int,
    failure_fraction: float,
) -> CellSummary:
    slope, r2 = scatter_fit(records)
    errors = [abs(r.b_est - r.b_true) for r in records]
    succeeded = trials - failures
    return CellSummary(
        n=n,
        m=m,
        trials=trials,
        failures=failures,
        slope=slope,
        r2=r2,
        max_abs_error=max(errors) if errors else math.nan,
        order_accuracy=correct_orders / succeeded if succeeded else math.nan,
        unreliable=failures > failure_fraction * trials,
    )
