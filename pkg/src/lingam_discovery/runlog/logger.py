from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any

import numpy as np


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass(slots=True)
class RunLogger:
    logger: logging.Logger

    def log(self, *, action: str, level: int = logging.INFO, **fields: Any) -> None:
        event: dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "action": action,
        }
        event.update({k: _jsonable(v) for k, v in fields.items()})
        event = {k: v for k, v in event.items() if v is not None}
        self.logger.log(level, json.dumps(event, ensure_ascii=False, sort_keys=False))


def get_run_logger(name: str = "lingam_discovery.run") -> RunLogger:
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter("%(message)s")
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.setLevel(logging.INFO)
    logger.propagate = False
    return RunLogger(logger=logger)
