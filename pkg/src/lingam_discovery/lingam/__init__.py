"""
LiNGAM discovery: estimation pipeline, matrix algebra and assumption diagnostics.
"""

from .algebra import compute_b, normalize_rows, recover_constants
from .diagnostics import assumption_report, build_report, independence_score
from .discover import discover, estimate

__all__ = [
    "discover",
    "estimate",
    "normalize_rows",
    "compute_b",
    "recover_constants",
    "independence_score",
    "assumption_report",
    "build_report",
]
