""" Local Outlier Factor with novelty-style scoring.

Fitting caches, for every reference point, its k-distance (distance to the
k-th nearest other reference) and its local reachability density

    lrd(a) = 1 / mean_{b in N_k(a)} max(k-distance(b), d(a, b))

where N_k(a) holds every reference within k-distance(a), ties included.
A query is scored against the references without joining them:

    LOF(x) = mean_{o in N_k(x)} lrd(o) / lrd(x)

Note:
    - Euclidean distance on scaled features, computed block-wise to bound memory
    - A zero mean reachability distance means infinite density; the model
      stores it as ``None`` and ∞/∞ is taken as 1
"""

import logging
from typing import Sequence

import numpy as np

from src.detectors.base import block_rows, query_matrix, to_model_space
from src.errors import DetectorFitError
from src.models.detectors import LofConfig, LofModel
from src.models.verdict import Verdict
from src.models.window import ScalingParams

logger = logging.getLogger(__name__)

_BLOCK_ELEMENTS = 4_000_000


def _block_size(n_refs: int, dim: int) -> int:
    return max(1, _BLOCK_ELEMENTS // max(1, n_refs * dim))


def _distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a[:, None, :] - b[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=-1))


def _kth_distance(dist: np.ndarray, k: int) -> np.ndarray:
    return np.partition(dist, k - 1, axis=1)[:, k - 1]


def _mean_reach(dist: np.ndarray, kdist_q: np.ndarray, kdist_ref: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    neighbors = dist <= kdist_q[:, None]
    reach = np.maximum(kdist_ref[None, :], dist)
    mean = np.where(neighbors, reach, 0.0).sum(axis=1) / neighbors.sum(axis=1)
    return mean, neighbors


def _density(mean_reach: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return 1.0 / mean_reach


def _self_excluded(dist: np.ndarray, rows: slice) -> np.ndarray:
    dist = dist.copy()
    local = np.arange(rows.stop - rows.start)
    dist[local, local + rows.start] = np.inf
    return dist


def fit_lof(
    samples: Sequence[Sequence[float]] | np.ndarray,
    cfg: LofConfig | None = None,
    scaling: ScalingParams | None = None,
) -> LofModel:
    cfg = cfg or LofConfig()
    refs, scaling = to_model_space(samples, scaling)
    n, dim = refs.shape
    if n <= cfg.k:
        raise DetectorFitError(f"LOF needs more than k={cfg.k} samples, got {n}")

    block = _block_size(n, dim)
    kdist = np.empty(n)
    for rows in block_rows(n, block):
        dist = _self_excluded(_distances(refs[rows], refs), rows)
        kdist[rows] = _kth_distance(dist, cfg.k)

    lrd = np.empty(n)
    for rows in block_rows(n, block):
        dist = _self_excluded(_distances(refs[rows], refs), rows)
        mean, _ = _mean_reach(dist, kdist[rows], kdist)
        lrd[rows] = _density(mean)

    logger.debug(f"LOF: {n} references, k={cfg.k}, {int(np.isinf(lrd).sum())} infinite densities")
    return LofModel(
        reference_points=refs.tolist(),
        k=cfg.k,
        k_distances=kdist.tolist(),
        lrd=[None if np.isinf(v) else float(v) for v in lrd],
        scaling=scaling,
    )


def _reference_lrd(model: LofModel) -> np.ndarray:
    return np.array([np.inf if v is None else v for v in model.lrd], dtype=float)


def _factors(model: LofModel, queries: np.ndarray, exclude_self: bool) -> np.ndarray:
    refs = np.asarray(model.reference_points, dtype=float)
    kdist_ref = np.asarray(model.k_distances, dtype=float)
    lrd_ref = _reference_lrd(model)

    factors = np.empty(len(queries))
    for rows in block_rows(len(queries), _block_size(len(refs), refs.shape[1])):
        dist = _distances(queries[rows], refs)
        if exclude_self:
            dist = _self_excluded(dist, rows)
        mean, neighbors = _mean_reach(dist, _kth_distance(dist, model.k), kdist_ref)
        lrd_q = _density(mean)[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = lrd_ref[None, :] / lrd_q
        ratio = np.where(np.isinf(lrd_ref)[None, :] & np.isinf(lrd_q), 1.0, ratio)
        factors[rows] = np.where(neighbors, ratio, 0.0).sum(axis=1) / neighbors.sum(axis=1)
    return factors


def lof_factors(model: LofModel, x: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    return _factors(model, query_matrix(model.scaling, x), exclude_self=False)


def lof_factor(model: LofModel, x: Sequence[float]) -> float:
    return float(lof_factors(model, np.asarray(x, dtype=float).reshape(1, -1))[0])


def lof_training_factors(model: LofModel) -> np.ndarray:
    """LOF of every reference against the model, each one excluded from its own neighborhood."""
    return _factors(model, np.asarray(model.reference_points, dtype=float), exclude_self=True)


def verdict_from_factor(factor: float, threshold: float) -> Verdict:
    return Verdict.from_flag(factor > threshold)


def lof_decide(model: LofModel, x: Sequence[float], threshold: float) -> Verdict:
    if threshold <= 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    return verdict_from_factor(lof_factor(model, x), threshold)
