""" Intersection ensemble of the one-class SVM, isolation forest and LOF.

A sample is abnormal only when every member flags it, so the ensemble's
flagged set is exactly the intersection of the members' flagged sets.
Each member is trained on its own uniform random subset of the training
windows (default fraction 0.8, without replacement); subset seeds derive
from one master seed.

Example:
    >>> model = fit_ensemble(train_matrix, DetectorSettings(), seed=7, scaling=params)
    >>> decision = ensemble_decide(model, window.features)
    >>> decision.verdict, decision.members
"""

import logging
import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel

from src.detectors.base import as_training_matrix
from src.detectors.iforest import fit_iforest, iforest_scores, verdict_from_score
from src.detectors.lof import fit_lof, lof_factors, verdict_from_factor
from src.detectors.ocsvm import fit_ocsvm, ocsvm_scores, verdict_from_g
from src.errors import SewerDataError
from src.models.detectors import DetectorSettings, EnsembleModel, LofConfig
from src.models.verdict import Verdict
from src.models.window import ScalingParams

logger = logging.getLogger(__name__)

MEMBERS = ("ocsvm", "iforest", "lof")


class EnsembleDecision(BaseModel):
    verdict: Verdict
    members: dict[str, Verdict]


def bag_intersection(verdicts: Sequence[Verdict]) -> Verdict:
    if not verdicts:
        raise SewerDataError("cannot combine an empty verdict list")
    return Verdict.from_flag(all(v.is_abnormal for v in verdicts))


def member_seeds(seed: int) -> dict[str, int]:
    children = np.random.SeedSequence(seed).spawn(len(MEMBERS))
    return {
        name: int(child.generate_state(1, dtype=np.uint64)[0])
        for name, child in zip(MEMBERS, children)
    }


def _subset(x: np.ndarray, fraction: float, seed: int, minimum: int) -> np.ndarray:
    n = len(x)
    size = min(n, max(minimum, math.ceil(fraction * n)))
    rng = np.random.default_rng(seed)
    return x[np.sort(rng.choice(n, size=size, replace=False))]


def fit_ensemble(
    samples: Sequence[Sequence[float]] | np.ndarray,
    settings: DetectorSettings | None = None,
    seed: int = 0,
    scaling: ScalingParams | None = None,
) -> EnsembleModel:
    settings = settings or DetectorSettings()
    x = as_training_matrix(samples)
    if scaling is None:
        scaling = ScalingParams.identity(x.shape[1])
    seeds = member_seeds(seed)
    fraction = settings.ensemble.subset_fraction

    ocsvm_x = _subset(x, fraction, seeds["ocsvm"], math.ceil(1 / settings.ocsvm.nu))
    ocsvm = fit_ocsvm(ocsvm_x, settings.ocsvm, settings.kernel, scaling)

    iforest_x = _subset(x, fraction, seeds["iforest"], 2)
    iforest_cfg = settings.iforest.model_copy(update={"seed": seeds["iforest"]})
    iforest = fit_iforest(iforest_x, iforest_cfg, scaling)

    lof_x = _subset(x, fraction, seeds["lof"], settings.lof.k + 1)
    lof_cfg = capped_lof_config(settings, len(lof_x))
    lof = fit_lof(lof_x, lof_cfg, scaling)

    logger.info(
        f"Ensemble fitted on {len(x)} windows "
        f"(subsets: ocsvm={len(ocsvm_x)}, iforest={len(iforest_x)}, lof={len(lof_x)})"
    )
    return EnsembleModel(
        ocsvm=ocsvm,
        iforest=iforest,
        iforest_threshold=settings.iforest.score_threshold,
        lof=lof,
        lof_threshold=settings.lof.factor_threshold,
        subset_fraction=fraction,
        member_seeds=seeds,
    )


def capped_lof_config(settings: DetectorSettings, n: int) -> LofConfig:
    if n >= 2 and settings.lof.k > n - 1:
        logger.debug(f"LOF k capped from {settings.lof.k} to {n - 1}")
        return settings.lof.model_copy(update={"k": n - 1})
    return settings.lof


def ensemble_member_scores(
    model: EnsembleModel, x: Sequence[Sequence[float]] | np.ndarray
) -> dict[str, np.ndarray]:
    return {
        "ocsvm": ocsvm_scores(model.ocsvm, x),
        "iforest": iforest_scores(model.iforest, x),
        "lof": lof_factors(model.lof, x),
    }


def verdicts_from_scores(model: EnsembleModel, scores: dict[str, np.ndarray]) -> dict[str, list[Verdict]]:
    members = {
        "ocsvm": [verdict_from_g(g) for g in scores["ocsvm"]],
        "iforest": [verdict_from_score(s, model.iforest_threshold) for s in scores["iforest"]],
        "lof": [verdict_from_factor(f, model.lof_threshold) for f in scores["lof"]],
    }
    members["ensemble"] = [
        bag_intersection(votes) for votes in zip(*(members[name] for name in MEMBERS))
    ]
    return members


def ensemble_member_verdicts(
    model: EnsembleModel, x: Sequence[Sequence[float]] | np.ndarray
) -> dict[str, list[Verdict]]:
    return verdicts_from_scores(model, ensemble_member_scores(model, x))


def ensemble_decide(model: EnsembleModel, x: Sequence[float]) -> EnsembleDecision:
    verdicts = ensemble_member_verdicts(model, np.asarray(x, dtype=float).reshape(1, -1))
    return EnsembleDecision(
        verdict=verdicts["ensemble"][0],
        members={name: verdicts[name][0] for name in MEMBERS},
    )
