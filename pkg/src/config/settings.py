""" Configuration settings for the flowmeter anomaly pipeline

Args:
    windowing: history length N and future length P
    detectors: kernel, one-class SVM, isolation forest, LOF and ensemble settings
    split: train fraction and reference-window selection
    seed: master seed for every randomized step
    logging: settings for logging verbosity

Returns:
    Settings: pydantic model encapsulating all configuration settings

Raises:
    pydantic.ValidationError: if the YAML file holds out-of-range values.

Note:
    - Loads settings from config.yaml (or the SEWER_CONFIG path) if present
    - Uses pydantic for data validation and default values
    - Caches settings instance per path

Example:
    >>> settings = get_settings()
    >>> print(settings.detectors.ocsvm.nu)

   """

import logging
from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel, Field
from rich.logging import RichHandler

from src.config.environment import config_path_override, log_level_override
from src.models.detectors import DetectorSettings
from src.models.window import SplitSettings, WindowConfig
from src.utils.progress import console

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent.parent / "config.yaml"


class LoggingSettings(BaseModel):
    level: str = "INFO"


class Settings(BaseModel):
    windowing: WindowConfig = WindowConfig()
    detectors: DetectorSettings = DetectorSettings()
    split: SplitSettings = SplitSettings()
    seed: int = Field(default=0, ge=0, lt=2**64)
    logging: LoggingSettings = LoggingSettings()


def load_settings(config_path: Path) -> Settings:
    with open(config_path, "r", encoding="utf-8") as f:
        try:
            config_data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"{config_path}: invalid YAML: {e}") from e
    if not isinstance(config_data, dict):
        raise ValueError(f"{config_path}: expected a mapping at the top level")
    return Settings(**config_data)


@lru_cache
def get_settings(config_path: Path | None = None) -> Settings:
    if config_path is not None:
        return load_settings(Path(config_path))

    config_path = config_path_override() or DEFAULT_CONFIG_PATH

    if config_path.exists():
        return load_settings(config_path)

    return Settings()


def setup_logging(settings: Settings | None = None, level: str | None = None) -> logging.Logger:
    if settings is None:
        settings = get_settings()

    name = level or log_level_override() or settings.logging.level
    log_level = getattr(logging, name.upper(), logging.INFO)

    logging.basicConfig(
        level=log_level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=True)],
        force=True,
    )

    return logging.getLogger("sewer_anomaly")
