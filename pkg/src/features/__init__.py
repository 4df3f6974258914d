"""Window construction and feature scaling."""

from .scaling import apply_scaling, fit_scaling, scale_features
from .windowing import (
    build_dataset,
    build_windows,
    chronological_split,
    feature_matrix,
    label_verdicts,
    select_reference,
    windows_to_csv,
)

__all__ = [
    "apply_scaling",
    "fit_scaling",
    "scale_features",
    "build_dataset",
    "build_windows",
    "chronological_split",
    "feature_matrix",
    "label_verdicts",
    "select_reference",
    "windows_to_csv",
]
