""" Isolation Forest: random partitioning trees where anomalies isolate early.

Each tree is grown on a uniform subsample (without replacement) of
min(ψ, n) points. A node picks a dimension uniformly among those that still
vary inside it and a split value uniformly between that dimension's min and
max; points below the split go left. Growth stops at the height limit
ceil(log2 ψ), at single-point nodes, or when the remaining points are identical.

Scoring:
    s(x) = 2 ** (-E[h(x)] / c(ψ)),   h = leaf depth + c(leaf size)
    c(m) = 2·H(m−1) − 2(m−1)/m,      H(i) = ln(i) + Euler–Mascheroni,  c(1) = 0

Note:
    - Tree t draws from ``numpy.random.default_rng([seed, t])`` so each tree is
      reproducible on its own and trees could be grown in any order
    - Scores are in (0, 1]; larger means more anomalous
"""

import logging
import math
from typing import Sequence

import numpy as np

from src.detectors.base import query_matrix, to_model_space
from src.errors import DetectorFitError
from src.models.detectors import IForestConfig, IForestModel, IsolationNode
from src.models.verdict import Verdict
from src.models.window import ScalingParams

logger = logging.getLogger(__name__)


def average_path_length(m: int) -> float:
    if m <= 1:
        return 0.0
    harmonic = math.log(m - 1) + np.euler_gamma
    return 2.0 * harmonic - 2.0 * (m - 1) / m


def _grow(points: np.ndarray, depth: int, limit: int, rng: np.random.Generator) -> IsolationNode:
    size = len(points)
    if size <= 1 or depth >= limit:
        return IsolationNode(size=size, depth=depth)

    lo, hi = points.min(axis=0), points.max(axis=0)
    varying = np.flatnonzero(hi > lo)
    if len(varying) == 0:
        return IsolationNode(size=size, depth=depth)

    dim = int(varying[rng.integers(len(varying))])
    split = float(rng.uniform(lo[dim], hi[dim]))
    # uniform() is half-open; a split on the minimum would leave the left side empty
    while split <= lo[dim]:
        split = float(rng.uniform(lo[dim], hi[dim]))

    goes_left = points[:, dim] < split
    return IsolationNode(
        size=size,
        depth=depth,
        split_dim=dim,
        split_value=split,
        left=_grow(points[goes_left], depth + 1, limit, rng),
        right=_grow(points[~goes_left], depth + 1, limit, rng),
    )


def fit_iforest(
    samples: Sequence[Sequence[float]] | np.ndarray,
    cfg: IForestConfig | None = None,
    scaling: ScalingParams | None = None,
) -> IForestModel:
    cfg = cfg or IForestConfig()
    x, scaling = to_model_space(samples, scaling)
    n = len(x)
    if n < 2:
        raise DetectorFitError(f"isolation forest needs at least 2 samples, got {n}")

    psi = min(cfg.subsample_size, n)
    limit = math.ceil(math.log2(psi))

    trees = []
    for t in range(cfg.n_trees):
        rng = np.random.default_rng([cfg.seed, t])
        idx = rng.choice(n, size=psi, replace=False)
        trees.append(_grow(x[idx], 0, limit, rng))

    logger.debug(f"Isolation forest: {cfg.n_trees} trees, psi={psi}, height limit {limit}")
    return IForestModel(trees=trees, subsample_size=psi, scaling=scaling)


def _path_lengths(node: IsolationNode, x: np.ndarray, rows: np.ndarray, out: np.ndarray) -> None:
    if len(rows) == 0:
        return
    if node.is_leaf:
        out[rows] = node.depth + average_path_length(node.size)
        return
    goes_left = x[rows, node.split_dim] < node.split_value
    _path_lengths(node.left, x, rows[goes_left], out)
    _path_lengths(node.right, x, rows[~goes_left], out)


def iforest_scores(model: IForestModel, x: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    queries = query_matrix(model.scaling, x)
    rows = np.arange(len(queries))
    total = np.zeros(len(queries))
    depth = np.empty(len(queries))
    for tree in model.trees:
        _path_lengths(tree, queries, rows, depth)
        total += depth
    mean_path = total / len(model.trees)
    norm = average_path_length(model.subsample_size)
    if norm == 0:
        return np.ones(len(queries))
    return np.power(2.0, -mean_path / norm)


def iforest_score(model: IForestModel, x: Sequence[float]) -> float:
    return float(iforest_scores(model, np.asarray(x, dtype=float).reshape(1, -1))[0])


def verdict_from_score(score: float, threshold: float) -> Verdict:
    return Verdict.from_flag(score > threshold)


def iforest_decide(model: IForestModel, x: Sequence[float], threshold: float) -> Verdict:
    if not 0 < threshold < 1:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    return verdict_from_score(iforest_score(model, x), threshold)
