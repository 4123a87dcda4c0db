"""
Configuration models and loaders.
"""

from .loader import load_run_config_from_dict, load_run_config_from_file, merge_overrides
from .schema import (
    DiagnosticsConfig,
    ExperimentConfig,
    GeneratorConfig,
    IcaConfig,
    PruneConfig,
    RunConfig,
    SearchConfig,
)

__all__ = [
    "IcaConfig",
    "SearchConfig",
    "DiagnosticsConfig",
    "PruneConfig",
    "GeneratorConfig",
    "ExperimentConfig",
    "RunConfig",
    "load_run_config_from_file",
    "load_run_config_from_dict",
    "merge_overrides",
]
