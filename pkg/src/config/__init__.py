"""Configuration module for environment, paths, and settings."""

from .environment import config_path_override, log_level_override
from .paths import RunPaths, get_run_paths
from .settings import Settings, get_settings, load_settings, setup_logging

__all__ = [
    "config_path_override",
    "log_level_override",
    "RunPaths",
    "get_run_paths",
    "Settings",
    "get_settings",
    "load_settings",
    "setup_logging",
]
