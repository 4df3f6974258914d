"""Metrics, published fixtures and the N/P sweep."""

from .metrics import evaluate, f1_score, flagged_indices
from .sweep import sweep, sweep_row

__all__ = ["evaluate", "f1_score", "flagged_indices", "sweep", "sweep_row"]
