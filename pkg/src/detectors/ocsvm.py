r""" One-Class SVM trained on the normal class only.

Solves the dual

    min_α  ½ αᵀQα    s.t.  0 ≤ α_i ≤ 1/(ν n),  Σ α_i = 1,    Q_ij = K(x_i, x_j)

with pairwise coordinate steps (maximal violating pair, analytic step on the
feasible segment) until the KKT gap drops below the tolerance or the pass
budget runs out. The fitted model exposes

    g(x) = Σ_i α_i K(x, x_i) − ρ

and the decision sign(g) with sign(0) = +1, i.e. boundary points are normal.

Note:
    - Only samples with α_i > 0 are kept as support vectors
    - ρ is the mean of g's kernel sum over free support vectors; without free
      ones it is the midpoint of the KKT interval (or its finite end)
    - Full Q is cached for small n; larger problems compute kernel columns on demand
"""

import logging
import math
from typing import Sequence

import numpy as np

from src.detectors.base import query_matrix, to_model_space
from src.errors import DetectorFitError
from src.models.detectors import KernelSpec, OcSvmModel, OcSvmTrainConfig
from src.models.verdict import Verdict
from src.models.window import ScalingParams

logger = logging.getLogger(__name__)

DENSE_LIMIT = 2500
_TAU = 1e-12


def kernel_matrix(kernel: KernelSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if kernel.kind == "linear":
        return a @ b.T
    sq = (
        np.sum(a * a, axis=1)[:, None]
        + np.sum(b * b, axis=1)[None, :]
        - 2.0 * (a @ b.T)
    )
    return np.exp(-kernel.gamma * np.maximum(sq, 0.0))


def resolve_kernel(kernel: KernelSpec, n_features: int) -> KernelSpec:
    if kernel.kind == "rbf" and kernel.gamma is None:
        return kernel.model_copy(update={"gamma": 1.0 / n_features})
    return kernel


class _KernelColumns:
    def __init__(self, kernel: KernelSpec, x: np.ndarray):
        self.kernel = kernel
        self.x = x
        self.dense = kernel_matrix(kernel, x, x) if len(x) <= DENSE_LIMIT else None
        if self.dense is not None:
            self.diag = np.diag(self.dense).copy()
        elif kernel.kind == "linear":
            self.diag = np.sum(x * x, axis=1)
        else:
            self.diag = np.ones(len(x))

    def column(self, i: int) -> np.ndarray:
        if self.dense is not None:
            return self.dense[:, i]
        return kernel_matrix(self.kernel, self.x, self.x[i:i + 1]).ravel()

    def columns(self, idx: np.ndarray) -> np.ndarray:
        if self.dense is not None:
            return self.dense[:, idx]
        return kernel_matrix(self.kernel, self.x, self.x[idx])


def _initial_alphas(n: int, upper: float) -> np.ndarray:
    alphas = np.zeros(n)
    m = min(n, math.floor(1.0 / upper + 1e-9))
    alphas[:m] = upper
    if m < n:
        alphas[m] = max(0.0, 1.0 - m * upper)
    return alphas


def _solve_rho(grad: np.ndarray, alphas: np.ndarray, upper: float) -> float:
    eps = upper * 1e-9
    at_zero = alphas <= eps
    at_upper = alphas >= upper - eps
    free = ~(at_zero | at_upper)
    if free.any():
        return float(np.mean(grad[free]))

    lower_end = grad[at_upper].max() if at_upper.any() else None
    upper_end = grad[at_zero].min() if at_zero.any() else None
    if lower_end is not None and upper_end is not None:
        return float((lower_end + upper_end) / 2.0)
    return float(lower_end if lower_end is not None else upper_end)


def fit_ocsvm(
    samples: Sequence[Sequence[float]] | np.ndarray,
    cfg: OcSvmTrainConfig | None = None,
    kernel: KernelSpec | None = None,
    scaling: ScalingParams | None = None,
) -> OcSvmModel:
    cfg = cfg or OcSvmTrainConfig()
    x, scaling = to_model_space(samples, scaling)
    n, dim = x.shape
    if n < 1:
        raise DetectorFitError("one-class SVM needs at least one sample")
    if cfg.nu * n < 1 - 1e-12:
        raise DetectorFitError(
            f"infeasible dual: nu * n = {cfg.nu * n:.4g} < 1 (nu={cfg.nu}, n={n})"
        )

    kernel = resolve_kernel(kernel or KernelSpec(), dim)
    upper = 1.0 / (cfg.nu * n)
    max_passes = cfg.max_passes or 10 * n
    cols = _KernelColumns(kernel, x)

    alphas = _initial_alphas(n, upper)
    active = np.flatnonzero(alphas)
    grad = cols.columns(active) @ alphas[active]

    eps = upper * 1e-12
    converged = False
    for _ in range(max_passes):
        can_grow = alphas < upper - eps
        can_shrink = alphas > eps
        if not can_grow.any() or not can_shrink.any():
            converged = True
            break
        i = int(np.argmin(np.where(can_grow, grad, np.inf)))
        j = int(np.argmax(np.where(can_shrink, grad, -np.inf)))
        gap = grad[j] - grad[i]
        if gap <= cfg.tolerance:
            converged = True
            break

        col_i, col_j = cols.column(i), cols.column(j)
        eta = max(cols.diag[i] + cols.diag[j] - 2.0 * col_i[j], _TAU)
        delta = min(gap / eta, upper - alphas[i], alphas[j])
        alphas[i] += delta
        alphas[j] -= delta
        grad += delta * (col_i - col_j)

    if not converged:
        logger.warning(f"One-class SVM did not converge within {max_passes} passes")

    rho = _solve_rho(grad, alphas, upper)
    support = np.flatnonzero(alphas > 0)
    logger.debug(f"One-class SVM: {len(support)} support vectors of {n}, rho={rho:.6g}")

    return OcSvmModel(
        support_vectors=x[support].tolist(),
        alphas=alphas[support].tolist(),
        rho=rho,
        kernel=kernel,
        scaling=scaling,
        nu=cfg.nu,
        n_train=n,
    )


def dual_objective(model: OcSvmModel) -> float:
    sv = np.asarray(model.support_vectors, dtype=float)
    alphas = np.asarray(model.alphas)
    return float(0.5 * alphas @ kernel_matrix(model.kernel, sv, sv) @ alphas)


def ocsvm_scores(model: OcSvmModel, x: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    queries = query_matrix(model.scaling, x)
    sv = np.asarray(model.support_vectors, dtype=float).reshape(-1, model.n_features)
    return kernel_matrix(model.kernel, queries, sv) @ np.asarray(model.alphas) - model.rho


def ocsvm_g(model: OcSvmModel, x: Sequence[float]) -> float:
    return float(ocsvm_scores(model, np.asarray(x, dtype=float).reshape(1, -1))[0])


def verdict_from_g(g: float) -> Verdict:
    return Verdict.NORMAL if g >= 0 else Verdict.ABNORMAL


def ocsvm_decide(model: OcSvmModel, x: Sequence[float]) -> Verdict:
    return verdict_from_g(ocsvm_g(model, x))
