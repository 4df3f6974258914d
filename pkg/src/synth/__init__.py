"""Synthetic flowmeter series with planted anomaly episodes."""

from .generator import abnormal_steps, expected_count, generate, scatter_episodes

__all__ = ["abnormal_steps", "expected_count", "generate", "scatter_episodes"]
