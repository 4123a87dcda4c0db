"""
Exact entry point for testing steps 2-5 in isolation.

Bypasses centering and ICA: the unmixing matrix is injected directly, so an
exact W = I - B must come back as exactly B.
"""

from __future__ import annotations

import time

import numpy as np

from ..config.schema import DiagnosticsConfig, SearchConfig
from ..models import CenteringInfo, LingamResult, UnmixingMatrix, default_names
from ..pipeline.context import DiscoveryContext
from ..pipeline.pipeline import Pipeline
from .discover import estimation_steps, result_from_context


def discover_from_unmixing(
    w: UnmixingMatrix | np.ndarray,
    *,
    row_means: np.ndarray | None = None,
    variable_names: tuple[str, ...] = (),
    search_config: SearchConfig | None = None,
    diagnostics_config: DiagnosticsConfig | None = None,
) -> LingamResult:
    unmixing = w if isinstance(w, UnmixingMatrix) else UnmixingMatrix(w=w)
    n = unmixing.n
    ctx = DiscoveryContext(
        n=n,
        variable_names=tuple(variable_names) or default_names(n),
        start_ns=time.perf_counter_ns(),
        search_config=search_config or SearchConfig(),
        diagnostics_config=diagnostics_config or DiagnosticsConfig(),
        unmixing=unmixing,
    )
    if row_means is not None:
        ctx.centering = CenteringInfo(row_means=row_means)
    return result_from_context(Pipeline(steps=estimation_steps()).execute(ctx))
