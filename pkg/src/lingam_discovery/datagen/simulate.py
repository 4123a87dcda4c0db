from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..models import DataMatrix, GroundTruthModel
from .noise import nongaussian_noise


@dataclass(frozen=True, slots=True, eq=False)
class Simulation:
    """Unshuffled draw: rows in generation order."""

    values: np.ndarray
    disturbances: np.ndarray


def simulate(model: GroundTruthModel, m: int, rng: np.random.Generator) -> Simulation:
    """Forward substitution of x = Bx + e + c in generation order."""
    n = model.n
    b = model.b_true.b
    disturbances = np.empty((n, m))
    for p in range(n):
        disturbances[p] = np.sqrt(model.variances[p]) * nongaussian_noise(m, float(model.exponents[p]), rng)

    values = np.empty((n, m))
    for p in range(n):
        values[p] = b[p, :p] @ values[:p] + disturbances[p] + model.constants[p]
    return Simulation(values=values, disturbances=disturbances)


def generate(model: GroundTruthModel, m: int, rng: np.random.Generator) -> DataMatrix:
    """Simulated data with rows permuted by model.shuffle to hide the causal order."""
    sim = simulate(model, m, rng)
    idx = list(model.shuffle)
    names = tuple(model.b_true.variable_names[p] for p in idx)
    return DataMatrix(values=sim.values[idx], variable_names=names)
