from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..models import GroundTruthModel, LingamResult
from ..permutation.search import upper_mass


@dataclass(frozen=True, slots=True)
class ScatterRecord:
    """One (true, estimated) connection strength pair; i, j index generation order."""

    trial: int
    n: int
    m: int
    i: int
    j: int
    b_true: float
    b_est: float

    def to_row(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "n": self.n,
            "m": self.m,
            "i": self.i,
            "j": self.j,
            "b_true": self.b_true,
            "b_est": self.b_est,
        }

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (self.n, self.m, self.trial, self.i, self.j)


def align_to_ground_truth(model: GroundTruthModel, result: LingamResult) -> np.ndarray:
    """
    Estimated B re-indexed into the model's generation order using the known
    shuffle, so entry [p, q] is directly comparable with model.b_true.b[p, q].
    """
    idx = list(model.true_order())
    return np.asarray(result.b_hat.b)[np.ix_(idx, idx)]


def order_is_correct(model: GroundTruthModel, result: LingamResult) -> bool:
    """True when the estimated order puts every true edge strictly below the diagonal."""
    return upper_mass(model.observed_b(), result.causal_order.order) == 0.0


def scatter_records(model: GroundTruthModel, result: LingamResult, *, trial: int, m: int) -> list[ScatterRecord]:
    """One record per ordered pair i != j, true zeros included."""
    est = align_to_ground_truth(model, result)
    true = model.b_true.b
    n = model.n
    return [
        ScatterRecord(trial=trial, n=n, m=m, i=i, j=j, b_true=float(true[i, j]), b_est=float(est[i, j]))
        for i in range(n)
        for j in range(n)
        if i != j
    ]
