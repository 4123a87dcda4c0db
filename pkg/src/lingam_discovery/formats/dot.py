from __future__ import annotations

import numpy as np

from ..models import CausalOrder, ConnectionMatrix
from ..permutation.search import apply_order_mask


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(b: ConnectionMatrix, order: CausalOrder, *, name: str = "lingam") -> str:
    """
    Graphviz digraph of the edges allowed by the causal order. Nodes are listed
    in causal order; edge labels are strengths rounded to 3 decimals.
    """
    names = b.variable_names
    masked = apply_order_mask(b, order)
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for v in order.order:
        lines.append(f"  {_quote(names[v])};")
    for i in order.order:
        for j in order.order:
            w = float(masked[i, j])
            if w != 0.0 and np.isfinite(w):
                lines.append(f'  {_quote(names[j])} -> {_quote(names[i])} [label="{w:.3f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
