"""Per-user defaults for the tvband CLI."""

import copy
import json
import os
from pathlib import Path
from typing import Any

import structlog

from tvband.infrastructure.storage.artifacts import write_json

logger = structlog.get_logger(__name__)

CONFIG_DIR_ENV_VAR = "TVBAND_CONFIG_DIR"

# Precedence: CLI flags > --config file > these user defaults > Settings.
DEFAULT_CONFIG: dict[str, Any] = {
    "thetas": [0.0],
    "window": None,
    "grid": None,
    "mu_w": None,
    "tol": 1e-9,
    "alpha": 0.0,
    "bandlimit": {
        "points_per_unit": 64,
    },
    "verify": {
        "thetas": [0.0, 0.25, 0.5, 0.75],
    },
}


def config_dir() -> Path:
    override = os.environ.get(CONFIG_DIR_ENV_VAR)
    return Path(override) if override else Path.home() / ".tvband"


def config_file() -> Path:
    return config_dir() / "config.json"


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Merge ``override`` into a copy of ``base``; nested dicts merge recursively."""
    result = copy.deepcopy(base)
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def load_config() -> dict[str, Any]:
    """Load the user configuration, falling back to defaults when unreadable."""
    path = config_file()
    if not path.exists():
        return copy.deepcopy(DEFAULT_CONFIG)
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.warning(
            "Unreadable user config, using defaults",
            operation="load_config",
            status="warning",
            path=str(path),
            error=str(e),
        )
        return copy.deepcopy(DEFAULT_CONFIG)
    if not isinstance(data, dict):
        return copy.deepcopy(DEFAULT_CONFIG)
    return _deep_merge(DEFAULT_CONFIG, data)


def save_config(config: dict[str, Any]) -> None:
    path = config_file()
    path.parent.mkdir(parents=True, exist_ok=True)
    write_json(path, config)


def get_config_value(key: str, default: Any = None) -> Any:
    """Look up a dotted key such as ``bandlimit.points_per_unit``."""
    value: Any = load_config()
    for part in key.split("."):
        if isinstance(value, dict) and part in value:
            value = value[part]
        else:
            return default
    return value


def set_config_value(key: str, value: Any) -> None:
    """Set a dotted key, creating intermediate objects.

    Raises:
        TypeError: If an intermediate key holds a non-object value.
    """
    config = load_config()
    parts = key.split(".")
    target = config
    for depth, part in enumerate(parts[:-1]):
        if part not in target:
            target[part] = {}
        elif not isinstance(target[part], dict):
            path = ".".join(parts[: depth + 1])
            raise TypeError(
                f"Configuration key '{path}' is a {type(target[part]).__name__}, "
                f"cannot set nested key '{key}'",
            )
        target = target[part]
    target[parts[-1]] = value
    save_config(config)


def reset_config() -> None:
    save_config(copy.deepcopy(DEFAULT_CONFIG))
