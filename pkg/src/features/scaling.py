""" Per-dimension standardization of window features.

Each dimension is shifted to zero mean and divided by its population
standard deviation; dimensions with no spread pass through untouched. The
fitted ScalingParams are stored in every model so new windows get the
identical transform.
"""

import numpy as np

from src.errors import DimensionMismatchError, SewerDataError
from src.models.window import ScalingParams, WindowSample


def fit_scaling(matrix: np.ndarray) -> ScalingParams:
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    if matrix.shape[0] == 0:
        raise SewerDataError("cannot fit scaling on an empty sample list")

    mean = matrix.mean(axis=0)
    std = matrix.std(axis=0)
    constant = np.ptp(matrix, axis=0) == 0
    mean[constant] = 0.0
    std[constant] = 1.0
    return ScalingParams(mean=mean.tolist(), scale=std.tolist())


def apply_scaling(params: ScalingParams, matrix: np.ndarray) -> np.ndarray:
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    if matrix.shape[1] != params.dim:
        raise DimensionMismatchError(params.dim, matrix.shape[1])
    return (matrix - np.asarray(params.mean)) / np.asarray(params.scale)


def scale_features(
    samples: list[WindowSample],
) -> tuple[list[WindowSample], ScalingParams]:
    if not samples:
        raise SewerDataError("cannot scale an empty sample list")

    params = fit_scaling(np.array([s.features for s in samples], dtype=float))
    scaled = apply_scaling(params, np.array([s.features for s in samples], dtype=float))
    return [
        s.model_copy(update={"features": row.tolist()})
        for s, row in zip(samples, scaled)
    ], params
