from __future__ import annotations

import logging
from collections.abc import Callable

from ..errors import ConvergenceError
from ..pipeline.context import DiscoveryContext
from ..pipeline.pipeline import Pipeline
from ..runlog.logger import RunLogger


def audit_step(run_logger: RunLogger | None, action: str = "discover"):
    def _step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
        if run_logger is None:
            return nxt()
        try:
            out = nxt()
        except Exception as e:
            run_logger.log(
                action=f"{action}_failed",
                level=logging.ERROR,
                step=ctx.step,
                n=ctx.n,
                m=ctx.data.m if ctx.data is not None else None,
                error=type(e).__name__,
                reason=str(e),
                ica=e.report.to_dict() if isinstance(e, ConvergenceError) else None,
                latency_ms=Pipeline.latency_ms(ctx.start_ns),
            )
            raise

        run_logger.log(
            action=action,
            n=out.n,
            m=out.data.m if out.data is not None else None,
            causal_order=list(out.causal_order.order) if out.causal_order else None,
            residual=out.diagnostics.triangularity_residual if out.diagnostics else None,
            warnings=out.diagnostics.labels() if out.diagnostics else None,
            ica=out.ica_report.to_dict() if out.ica_report else None,
            latency_ms=Pipeline.latency_ms(ctx.start_ns),
        )
        return out

    return _step
