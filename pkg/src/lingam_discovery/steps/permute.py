from __future__ import annotations

from collections.abc import Callable

from ..permutation.search import diag_permutation_assignment, diag_permutation_exhaustive
from ..pipeline.context import DiscoveryContext


def permute_rows_step(ctx: DiscoveryContext, nxt: Callable[[], DiscoveryContext]) -> DiscoveryContext:
    ctx.step = "permute_rows"
    if ctx.unmixing is None:
        raise ValueError("permute_rows step needs an unmixing matrix in the context")
    if ctx.search_config.row_solver == "exhaustive":
        perm = diag_permutation_exhaustive(ctx.unmixing, limit=ctx.search_config.exhaustive_limit)
    else:
        perm = diag_permutation_assignment(ctx.unmixing)
    ctx.row_permutation = perm
    ctx.w_tilde = perm.apply(ctx.unmixing.w)
    return nxt()
