from __future__ import annotations

from collections.abc import Callable

from ..lingam.diagnostics import build_report
from ..pipeline.context import DiscoveryContext


def diagnose_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    ctx.step = "diagnose"
    if ctx.b_hat is None or ctx.causal_order is None:
        raise ValueError("diagnose step needs the connection matrix and causal order")
    ctx.diagnostics = build_report(
        ctx.b_hat,
        ctx.causal_order,
        ctx.components,
        ica_report=ctx.ica_report,
        config=ctx.diagnostics_config,
    )
    return nxt()
