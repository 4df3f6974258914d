"""Shared input handling for the detectors."""

from typing import Sequence

import numpy as np

from src.errors import DetectorFitError, DimensionMismatchError
from src.features.scaling import apply_scaling
from src.models.window import ScalingParams


def as_training_matrix(samples: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    if isinstance(samples, np.ndarray):
        matrix = np.atleast_2d(samples.astype(float))
    else:
        dims = {len(s) for s in samples}
        if len(dims) > 1:
            raise DetectorFitError(f"inconsistent feature dimensions: {sorted(dims)}")
        matrix = np.array(samples, dtype=float).reshape(len(samples), -1)
    if not np.all(np.isfinite(matrix)):
        raise DetectorFitError("training samples contain non-finite values")
    return matrix


def to_model_space(
    samples: Sequence[Sequence[float]] | np.ndarray, scaling: ScalingParams | None
) -> tuple[np.ndarray, ScalingParams]:
    """Validate training samples and map them into the scaled space."""
    matrix = as_training_matrix(samples)
    if scaling is None:
        scaling = ScalingParams.identity(matrix.shape[1])
    return apply_scaling(scaling, matrix), scaling


def query_matrix(scaling: ScalingParams, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Map one query vector (1-D) or a batch (2-D) into the model's scaled space."""
    matrix = np.asarray(x, dtype=float)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.shape[1] != scaling.dim:
        raise DimensionMismatchError(scaling.dim, matrix.shape[1])
    return apply_scaling(scaling, matrix)


def block_rows(n: int, block: int):
    for start in range(0, n, block):
        yield slice(start, min(start + block, n))
