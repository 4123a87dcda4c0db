"""
Structured JSON-line logging of discovery runs.
"""

from .logger import RunLogger, get_run_logger

__all__ = ["RunLogger", "get_run_logger"]
