from __future__ import annotations

from collections.abc import Callable

from ..lingam.algebra import normalize_rows
from ..pipeline.context import DiscoveryContext


def normalize_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    ctx.step = "normalize"
    if ctx.w_tilde is None:
        raise ValueError("normalize step needs the permuted unmixing matrix")
    ctx.w_tilde_prime = normalize_rows(ctx.w_tilde)
    return nxt()
