from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from ..config.schema import DiagnosticsConfig, IcaConfig, SearchConfig
from ..models import (
    CausalOrder,
    CenteringInfo,
    ConnectionMatrix,
    DataMatrix,
    DiagnosticsReport,
    IcaReport,
    RowPermutation,
    UnmixingMatrix,
)


@dataclass(slots=True)
class DiscoveryContext:
    """Mutable state threaded through the discovery steps."""

    n: int
    variable_names: tuple[str, ...]
    start_ns: int

    ica_config: IcaConfig = field(default_factory=IcaConfig)
    search_config: SearchConfig = field(default_factory=SearchConfig)
    diagnostics_config: DiagnosticsConfig = field(default_factory=DiagnosticsConfig)

    data: DataMatrix | None = None
    centered: DataMatrix | None = None
    centering: CenteringInfo | None = None

    unmixing: UnmixingMatrix | None = None
    ica_report: IcaReport | None = None
    components: DataMatrix | None = None

    row_permutation: RowPermutation | None = None
    w_tilde: np.ndarray | None = None
    w_tilde_prime: UnmixingMatrix | None = None
    b_hat: ConnectionMatrix | None = None
    constants: np.ndarray | None = None
    causal_order: CausalOrder | None = None
    diagnostics: DiagnosticsReport | None = None

    step: str | None = None


StepFunc = Callable[[DiscoveryContext, Callable[[], DiscoveryContext]], DiscoveryContext]
