from __future__ import annotations

import time
from collections.abc import Callable

from .context import DiscoveryContext, StepFunc


class Pipeline:
    """
    Chains step functions; each step receives the context and a callable that
    runs the rest of the chain, so a step can act before and after its successors.
    """

    def __init__(self, *, steps: list[StepFunc] | None = None):
        self.steps = steps or []

    def execute(self, ctx: DiscoveryContext) -> DiscoveryContext:
        def finish() -> DiscoveryContext:
            return ctx

        nxt: Callable[[], DiscoveryContext] = finish
        for step in reversed(self.steps):
            prev = nxt

            def make_next(s: StepFunc, p: Callable[[], DiscoveryContext]) -> Callable[[], DiscoveryContext]:
                return lambda: s(ctx, p)

            nxt = make_next(step, prev)

        return nxt()

    @staticmethod
    def latency_ms(start_ns: int) -> int:
        return int((time.perf_counter_ns() - start_ns) / 1_000_000)
