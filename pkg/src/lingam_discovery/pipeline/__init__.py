from __future__ import annotations

from .context import DiscoveryContext, StepFunc
from .pipeline import Pipeline

__all__ = ["DiscoveryContext", "StepFunc", "Pipeline"]
