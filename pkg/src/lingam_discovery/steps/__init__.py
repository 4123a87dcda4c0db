from __future__ import annotations

from .audit import audit_step
from .center import center_step
from .connection import connection_step
from .diagnose import diagnose_step
from .ica import ica_step
from .normalize import normalize_step
from .order import causal_order_step
from .permute import permute_rows_step

__all__ = [
    "audit_step",
    "center_step",
    "ica_step",
    "permute_rows_step",
    "normalize_step",
    "connection_step",
    "causal_order_step",
    "diagnose_step",
]
