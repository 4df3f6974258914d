""" Environment overrides loaded from the process environment or a ``.env`` file.

    SEWER_CONFIG     path of the settings YAML to use instead of config.yaml
    SEWER_LOG_LEVEL  logging level overriding the settings file
"""

import os
from pathlib import Path

try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

CONFIG_ENV = "SEWER_CONFIG"
LOG_LEVEL_ENV = "SEWER_LOG_LEVEL"


def config_path_override() -> Path | None:
    value = os.environ.get(CONFIG_ENV)
    return Path(value) if value else None


def log_level_override() -> str | None:
    return os.environ.get(LOG_LEVEL_ENV) or None
