from __future__ import annotations

import numpy as np


def nongaussian_noise(m: int, exponent: float, rng: np.random.Generator) -> np.ndarray:
    """
    sign(g) * |g|**exponent for standard gaussian g, standardised to zero mean and
    unit variance by its sample moments. Exponent 1 gives gaussian noise,
    exponents above 1 super-gaussian and below 1 sub-gaussian noise.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not exponent > 0:
        raise ValueError(f"exponent must be positive, got {exponent}")
    g = rng.standard_normal(m)
    e = np.sign(g) * np.abs(g) ** exponent
    if m < 2:
        # a single sample has no spread to standardise
        return np.zeros(m)
    e = e - e.mean()
    return e / e.std()
