"""
Configuration for the transduction toolkit.

Settings live in config.json (written by setup.py) and are merged over
DEFAULT_CONFIG, so a partial file only needs the keys it changes.
"""

import copy
import json
from pathlib import Path

from errors import ConfigError

DEFAULT_CONFIG = {
    "library": {
        "automata_dir": "library/automata",
        "transducers_dir": "library/transducers",
        "morphisms_dir": "library/morphisms",
    },
    "output": {
        "results_dir": "results",
        "dot_rankdir": "LR",
    },
    "limits": {
        "max_dekking_states": 200000,
        "max_dyck_index": 8,
        "max_fractal_pixels": 4194304,
        "max_eval_terms": 1048576,
    },
    "testing": {
        "random_instances": 200,
        "oracle_horizon": 4096,
        "seed": 20240601,
    },
}


def _merge(base, override):
    """Recursively merge override into a copy of base"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path="config.json"):
    """Load configuration, falling back to the defaults when no file exists"""
    config_path = Path(path)
    if not config_path.exists():
        return copy.deepcopy(DEFAULT_CONFIG)

    try:
        with open(config_path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{config_path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"{config_path}: top level must be an object")
    return _merge(DEFAULT_CONFIG, data)


def save_config(config, path="config.json"):
    with open(path, "w") as f:
        json.dump(config, f, indent=2)
