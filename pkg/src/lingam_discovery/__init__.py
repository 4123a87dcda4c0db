from __future__ import annotations

from .config import DiagnosticsConfig, IcaConfig, PruneConfig, RunConfig, SearchConfig
from .errors import (
    BootstrapInstabilityError,
    ConvergenceError,
    DegenerateDataError,
    Diagnostic,
    InvalidDataError,
    LingamError,
    SearchLimitError,
    SingularStructureError,
)
from .lingam import discover, estimate
from .models import (
    CausalOrder,
    ConnectionMatrix,
    DataMatrix,
    GroundTruthModel,
    LingamResult,
    PruneReport,
    UnmixingMatrix,
)
from .pruning import bootstrap_prune

__all__ = [
    "discover",
    "estimate",
    "bootstrap_prune",
    "DataMatrix",
    "UnmixingMatrix",
    "ConnectionMatrix",
    "CausalOrder",
    "LingamResult",
    "PruneReport",
    "GroundTruthModel",
    "IcaConfig",
    "SearchConfig",
    "DiagnosticsConfig",
    "PruneConfig",
    "RunConfig",
    "Diagnostic",
    "LingamError",
    "InvalidDataError",
    "DegenerateDataError",
    "SingularStructureError",
    "SearchLimitError",
    "ConvergenceError",
    "BootstrapInstabilityError",
]
