"""Pipeline orchestration for training, scoring, evaluation and sweeps."""

from .runner import evaluate_model, load_segments, run_sweep, score_windows, train_detector

__all__ = ["evaluate_model", "load_segments", "run_sweep", "score_windows", "train_detector"]
