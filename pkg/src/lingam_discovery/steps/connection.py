from __future__ import annotations

from collections.abc import Callable

import numpy as np

from ..lingam.algebra import compute_b, recover_constants
from ..pipeline.context import DiscoveryContext


def connection_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    ctx.step = "connection"
    if ctx.w_tilde_prime is None:
        raise ValueError("connection step needs the normalised unmixing matrix")
    ctx.b_hat = compute_b(ctx.w_tilde_prime, ctx.variable_names)
    means = ctx.centering.row_means if ctx.centering is not None else np.zeros(ctx.n)
    ctx.constants = recover_constants(ctx.b_hat, means)
    return nxt()
