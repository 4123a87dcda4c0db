from __future__ import annotations

from collections.abc import Callable

from ..ica.fastica import fast_ica
from ..models import DataMatrix
from ..pipeline.context import DiscoveryContext


def ica_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    """Runs FastICA unless an unmixing matrix was injected; then records the components S = W X."""
    ctx.step = "ica"
    if ctx.centered is None:
        raise ValueError("ica step needs centered data in the context")
    if ctx.unmixing is None:
        ctx.unmixing, ctx.ica_report = fast_ica(ctx.centered, ctx.ica_config)
    ctx.components = DataMatrix(
        values=ctx.unmixing.w @ ctx.centered.values,
        variable_names=tuple(f"s{i + 1}" for i in range(ctx.n)),
    )
    return nxt()
