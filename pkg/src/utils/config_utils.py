import copy
import logging
import math
import os
import sys
from typing import Optional

import yaml

from .misc import check_file_utils

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "configs", "default.yaml"
)
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

DEFAULT_CONFIG = {
    "sweep": {
        "theta": math.pi / 3.958,
        "phi_min": 0.0,
        "phi_max": math.pi,
        "steps": 721,
    },
    "solver": {
        "method": "grid_golden",
        "resolution": [720, 1440],
        "step_tolerance": 1e-6,
        "candidate_window": 1e-3,
        "tie_tolerance": 1e-7,
        "max_candidates": 32,
        "max_passes": 200,
        "n_workers": 4,
        "progress": False,
    },
    "output": {
        "float_format": ".9g",
    },
    "data": {
        "root": "",
    },
}

# Expected type of each field, used by propagate_config.
FIELD_TYPES = {
    "sweep": {"theta": float, "phi_min": float, "phi_max": float, "steps": int},
    "solver": {
        "method": str,
        "resolution": list,
        "step_tolerance": float,
        "candidate_window": float,
        "tie_tolerance": float,
        "max_candidates": int,
        "max_passes": int,
        "n_workers": int,
        "progress": bool,
    },
    "output": {"float_format": str},
    "data": {"root": str},
}


# Config IO functions
def load_config(config_file: Optional[str] = None) -> dict:
    """Load the yaml config and fill in defaults.

    Without `config_file` the bundled default.yaml is read, or the built-in
    defaults when it is not there. An explicit file must exist.
    """
    config: dict = {}
    if config_file is None and check_file_utils(DEFAULT_CONFIG_FILE):
        config_file = DEFAULT_CONFIG_FILE
    if config_file is not None:
        with open(config_file, "r") as f:
            config = yaml.safe_load(f) or {}
        logger.info(f"Loaded config from {config_file}")
    propagate_config(config)
    return config


def propagate_config(config: dict):
    """In-place function.
    Fill missing sections and fields with the defaults and check field types.

    Args:
        config (dict): to be overloaded.
    """
    if not isinstance(config, dict):
        raise ValueError(f"Config should be a mapping. Got {type(config).__name__}.")
    for section, defaults in DEFAULT_CONFIG.items():
        values = config.setdefault(section, {})
        if not isinstance(values, dict):
            raise ValueError(f"Config section {section} should be a mapping.")
        for key, default in defaults.items():
            values.setdefault(key, copy.deepcopy(default))
            expected = FIELD_TYPES[section][key]
            value = values[key]
            if expected is float and isinstance(value, int) and not isinstance(value, bool):
                values[key] = float(value)
            elif not isinstance(value, expected) or (
                expected is int and isinstance(value, bool)
            ):
                e = f"{section}.{key} should be {expected.__name__}. Got {value!r}."
                logger.error(e)
                raise ValueError(e)
    resolution = config["solver"]["resolution"]
    if len(resolution) != 2 or not all(isinstance(n, int) for n in resolution):
        e = f"solver.resolution should be [n_theta, n_phi]. Got {resolution!r}."
        logger.error(e)
        raise ValueError(e)


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None):
    """Setup log level and handlers. Standard output is left for results."""
    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError("Invalid log level: %s" % log_level)
    handlers: list = [logging.StreamHandler(sys.stderr)]
    if log_file is not None:
        handlers.append(logging.FileHandler(log_file, mode="w"))
    logging.basicConfig(handlers=handlers, level=level, format=LOG_FORMAT, force=True)
