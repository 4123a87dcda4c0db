from __future__ import annotations

import numpy as np

from ..config.schema import GeneratorConfig
from ..models import ConnectionMatrix, GroundTruthModel


def random_model(config: GeneratorConfig) -> GroundTruthModel:
    """
    Random strictly lower-triangular network with hidden causal order.

    Every eligible entry is zero with probability `sparsity`, otherwise a
    magnitude drawn uniformly from `coefficient_range` with a random sign.
    Exponents come from one of the two intervals (each equally likely).
    Variable names are assigned so the observed rows read x1..xn.
    """
    rng = np.random.default_rng(config.seed)
    n = config.n

    b = np.zeros((n, n))
    lo, hi = config.coefficient_range
    for i in range(n):
        for j in range(i):
            is_zero = rng.random() < config.sparsity
            magnitude = rng.uniform(lo, hi)
            sign = 1.0 if rng.random() < 0.5 else -1.0
            b[i, j] = 0.0 if is_zero else sign * magnitude

    variances = rng.uniform(*config.disturbance_variance_range, size=n)
    constants = rng.uniform(*config.constants_range, size=n)
    intervals = rng.integers(0, 2, size=n)
    exponents = np.array([rng.uniform(*config.exponent_ranges[k]) for k in intervals])
    if config.disturbance == "gaussian":
        exponents = np.ones(n)
    shuffle = tuple(int(p) for p in rng.permutation(n))

    names = [""] * n
    for k, p in enumerate(shuffle):
        names[p] = f"x{k + 1}"

    return GroundTruthModel(
        b_true=ConnectionMatrix(b=b, variable_names=tuple(names)),
        constants=constants,
        variances=variances,
        exponents=exponents,
        shuffle=shuffle,
    )


def reference_model(exponents: tuple[float, float, float, float] = (2.0, 0.5, 1.8, 0.6)) -> GroundTruthModel:
    """
    Four-variable reference network

        x4 = e4,  x1 = x4 + e1,  x2 = 0.2 x4 + e2,  x3 = -5 x1 - 2 x2 + e3

    generated in the order (x4, x1, x2, x3) and observed as (x1, x2, x3, x4).
    Exponents are given in generation order; unit variances, zero constants.
    """
    b = np.array(
        [
            [0.0, 0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.2, 0.0, 0.0, 0.0],
            [0.0, -5.0, -2.0, 0.0],
        ]
    )
    return GroundTruthModel(
        b_true=ConnectionMatrix(b=b, variable_names=("x4", "x1", "x2", "x3")),
        constants=np.zeros(4),
        variances=np.ones(4),
        exponents=np.array(exponents, dtype=float),
        shuffle=(1, 2, 3, 0),
    )
