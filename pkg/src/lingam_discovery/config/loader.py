from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .schema import RunConfig


def _load_yaml(text: str) -> dict[str, Any]:
    try:
        import yaml  # type: ignore
    except Exception as e:
        raise RuntimeError("PyYAML is required to load .yaml configs. Install pyyaml.") from e
    data = yaml.safe_load(text) or {}
    if not isinstance(data, dict):
        raise ValueError("Config YAML must parse to a dict/object.")
    return data


def _load_json(text: str) -> dict[str, Any]:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("Config JSON must parse to a dict/object.")
    return data


def load_run_config_from_file(path: str | Path) -> RunConfig:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(path))

    raw = p.read_text(encoding="utf-8")
    if p.suffix.lower() in [".yaml", ".yml"]:
        d = _load_yaml(raw)
    elif p.suffix.lower() == ".json":
        d = _load_json(raw)
    else:
        try:
            d = _load_yaml(raw)
        except Exception:
            d = _load_json(raw)

    return RunConfig.model_validate(d)


def load_run_config_from_dict(d: dict[str, Any]) -> RunConfig:
    return RunConfig.model_validate(d)


def merge_overrides(config: RunConfig, overrides: dict[str, dict[str, Any]]) -> RunConfig:
    """
    Apply per-section overrides (e.g. from CLI flags) on top of a config.
    None values mean "flag not given" and leave the file value in place.
    """
    d = config.model_dump()
    for section, values in overrides.items():
        if section not in d:
            raise ValueError(f"Unknown config section: {section}")
        for key, value in values.items():
            if value is not None:
                d[section][key] = value
    return RunConfig.model_validate(d)
