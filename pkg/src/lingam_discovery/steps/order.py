from __future__ import annotations

from collections.abc import Callable

from ..permutation.search import causal_order_search
from ..pipeline.context import DiscoveryContext


def causal_order_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    ctx.step = "causal_order"
    if ctx.b_hat is None:
        raise ValueError("causal_order step needs the connection matrix")
    ctx.causal_order = causal_order_search(ctx.b_hat, ctx.search_config)
    return nxt()
