from __future__ import annotations

from collections.abc import Callable

from ..ica.whitening import center
from ..pipeline.context import DiscoveryContext


def center_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    ctx.step = "center"
    if ctx.data is None:
        raise ValueError("center step needs data in the context")
    ctx.centered, ctx.centering = center(ctx.data)
    return nxt()
