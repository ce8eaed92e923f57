"""Configuration settings for cliffordix."""

import os

try:
    import yaml
except ImportError:
    yaml = None

from cliffordix.logger import Logger

# Default application settings
DEFAULT_SETTINGS = {
    "r_max": None,              # absolute gonality table length; None means r_max_factor * genus
    "r_max_factor": 3,
    "iteration_cap_factor": 10,  # propagation sweeps allowed per table entry
    "oracle_max_rank": 12,
    "oracle_max_genus": 60,
    "default_ranks": "1..8",
    "output_format": "table",
    "log_level": "WARNING",
    "log_file": None,
}

# Environment override for r_max
RMAX_ENV_VAR = "CLIFFORDIX_RMAX"

# Curve family names accepted on the command line
FAMILY_CHOICES = {
    "general": {"params": ("genus",), "description": "General curve of genus g"},
    "hyperelliptic": {"params": ("genus",), "description": "Hyperelliptic curve"},
    "trigonal": {"params": ("genus",), "description": "General trigonal curve"},
    "kgonal": {"params": ("genus", "k"), "description": "General k-gonal curve, k >= 4"},
    "bielliptic": {"params": ("genus",), "description": "Bielliptic curve"},
    "plane": {"params": ("delta",), "description": "Smooth plane curve of degree delta"},
    "nodal": {
        "params": ("delta", "nodes"),
        "description": "General nodal plane curve of degree delta with nu nodes",
    },
    "custom": {
        "params": ("genus",),
        "description": "Genus with optional gamma_1 and asserted d_r values",
    },
}

# Report format configurations
REPORT_FORMATS = {
    "table": {"extension": "txt", "description": "Plain text tables"},
    "json": {"extension": "json", "description": "JSON document, rationals as p/q strings"},
    "csv": {"extension": "csv", "description": "Comma separated rows, one per rank"},
}


def load_settings(path=None):
    """Merge defaults, an optional YAML file and the environment."""
    logger = Logger()
    settings = dict(DEFAULT_SETTINGS)

    if path:
        if yaml is None:
            raise RuntimeError("pyyaml is required to read a settings file")
        with open(path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"settings file {path} must contain a mapping")
        for key, value in loaded.items():
            if key not in DEFAULT_SETTINGS:
                logger.warning(f"Ignoring unknown setting '{key}' in {path}")
                continue
            settings[key] = value

    env_rmax = os.environ.get(RMAX_ENV_VAR)
    if env_rmax:
        try:
            settings["r_max"] = int(env_rmax)
        except ValueError:
            logger.warning(f"Ignoring non-integer {RMAX_ENV_VAR}={env_rmax!r}")

    return settings


def resolve_r_max(settings, genus):
    """Gonality table length for a curve of the given genus."""
    if settings.get("r_max"):
        return max(int(settings["r_max"]), 1)
    return max(int(settings["r_max_factor"]) * genus, 1)
