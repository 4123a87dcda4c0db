from __future__ import annotations

import time

from ..config.schema import DiagnosticsConfig, IcaConfig, SearchConfig
from ..models import DataMatrix, IcaReport, LingamResult, UnmixingMatrix
from ..pipeline.context import DiscoveryContext, StepFunc
from ..pipeline.pipeline import Pipeline
from ..runlog.logger import RunLogger
from ..steps.audit import audit_step
from ..steps.center import center_step
from ..steps.connection import connection_step
from ..steps.diagnose import diagnose_step
from ..steps.ica import ica_step
from ..steps.normalize import normalize_step
from ..steps.order import causal_order_step
from ..steps.permute import permute_rows_step


def estimation_steps() -> list[StepFunc]:
    """Steps 2-5 plus diagnostics; everything after the unmixing matrix is known."""
    return [permute_rows_step, normalize_step, connection_step, causal_order_step, diagnose_step]


def result_from_context(ctx: DiscoveryContext) -> LingamResult:
    assert ctx.b_hat is not None and ctx.causal_order is not None
    assert ctx.w_tilde_prime is not None and ctx.diagnostics is not None
    assert ctx.constants is not None
    return LingamResult(
        b_hat=ctx.b_hat,
        causal_order=ctx.causal_order,
        w_tilde_prime=ctx.w_tilde_prime,
        constants=ctx.constants,
        diagnostics=ctx.diagnostics,
        row_permutation=ctx.row_permutation,
        ica_report=ctx.ica_report,
    )


def _context(
    x: DataMatrix,
    ica_config: IcaConfig | None,
    search_config: SearchConfig | None,
    diagnostics_config: DiagnosticsConfig | None,
) -> DiscoveryContext:
    return DiscoveryContext(
        n=x.n,
        variable_names=x.variable_names,
        start_ns=time.perf_counter_ns(),
        ica_config=ica_config or IcaConfig(),
        search_config=search_config or SearchConfig(),
        diagnostics_config=diagnostics_config or DiagnosticsConfig(),
        data=x,
    )


def discover(
    x: DataMatrix,
    ica_config: IcaConfig | None = None,
    *,
    search_config: SearchConfig | None = None,
    diagnostics_config: DiagnosticsConfig | None = None,
    run_logger: RunLogger | None = None,
) -> LingamResult:
    """
    Full discovery: center, FastICA, diagonal-maximising row permutation,
    row normalisation, B = I - W~', causal-order search, diagnostics.

    Deterministic given ica_config.seed. Raises ConvergenceError when FastICA
    fails; the error carries the best-effort unmixing matrix, which can be fed
    to estimate().
    """
    ctx = _context(x, ica_config, search_config, diagnostics_config)
    steps = [audit_step(run_logger), center_step, ica_step, *estimation_steps()]
    return result_from_context(Pipeline(steps=steps).execute(ctx))


def estimate(
    x: DataMatrix,
    unmixing: UnmixingMatrix,
    *,
    ica_report: IcaReport | None = None,
    search_config: SearchConfig | None = None,
    diagnostics_config: DiagnosticsConfig | None = None,
    run_logger: RunLogger | None = None,
) -> LingamResult:
    """Steps 2-5 and diagnostics for a given unmixing matrix of x (no ICA run)."""
    ctx = _context(x, None, search_config, diagnostics_config)
    ctx.unmixing = unmixing
    ctx.ica_report = ica_report
    steps = [audit_step(run_logger, action="estimate"), center_step, ica_step, *estimation_steps()]
    return result_from_context(Pipeline(steps=steps).execute(ctx))
