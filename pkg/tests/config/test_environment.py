"""Tests for config.environment module."""

from pathlib import Path

from src.config.environment import config_path_override, log_level_override


def test_config_path_override_from_env(monkeypatch):
    """Test SEWER_CONFIG is read as a path."""
    monkeypatch.setenv("SEWER_CONFIG", "/tmp/site.yaml")
    assert config_path_override() == Path("/tmp/site.yaml")


def test_no_overrides_by_default():
    """Test that unset variables give no override."""
    assert config_path_override() is None
    assert log_level_override() is None


def test_log_level_override(monkeypatch):
    """Test SEWER_LOG_LEVEL is passed through."""
    monkeypatch.setenv("SEWER_LOG_LEVEL", "DEBUG")
    assert log_level_override() == "DEBUG"
