""" Uniform fit/score entry points over the four detector kinds.

Scores use each detector's own scale (g for the one-class SVM, s for the
isolation forest, the factor for LOF); verdict lists are keyed by member
name, plus ``ensemble`` for the intersection model.
"""

import logging

import numpy as np

from src.detectors.ensemble import (
    capped_lof_config,
    ensemble_member_scores,
    fit_ensemble,
    verdicts_from_scores,
)
from src.detectors.iforest import fit_iforest, iforest_scores, verdict_from_score
from src.detectors.lof import fit_lof, lof_factors, verdict_from_factor
from src.detectors.ocsvm import fit_ocsvm, ocsvm_scores, verdict_from_g
from src.models.detectors import (
    DetectorKind,
    DetectorSettings,
    EnsembleModel,
    IForestModel,
    LofModel,
    OcSvmModel,
)
from src.models.verdict import Verdict
from src.models.window import ScalingParams

logger = logging.getLogger(__name__)

DetectorModelType = OcSvmModel | IForestModel | LofModel | EnsembleModel


def fit_detector(
    kind: DetectorKind,
    samples: np.ndarray,
    settings: DetectorSettings,
    seed: int,
    scaling: ScalingParams,
) -> DetectorModelType:
    logger.info(f"Fitting {kind.value} on {len(samples)} windows")
    if kind == DetectorKind.OCSVM:
        return fit_ocsvm(samples, settings.ocsvm, settings.kernel, scaling)
    if kind == DetectorKind.IFOREST:
        cfg = settings.iforest.model_copy(update={"seed": seed})
        return fit_iforest(samples, cfg, scaling)
    if kind == DetectorKind.LOF:
        return fit_lof(samples, capped_lof_config(settings, len(samples)), scaling)
    return fit_ensemble(samples, settings, seed, scaling)


def score_detector(
    model: DetectorModelType, settings: DetectorSettings, x: np.ndarray
) -> tuple[dict[str, np.ndarray], dict[str, list[Verdict]]]:
    """Raw scores and verdicts per member; thresholds of single models come from settings."""
    if isinstance(model, EnsembleModel):
        scores = ensemble_member_scores(model, x)
        return scores, verdicts_from_scores(model, scores)
    if isinstance(model, OcSvmModel):
        g = ocsvm_scores(model, x)
        return {"ocsvm": g}, {"ocsvm": [verdict_from_g(v) for v in g]}
    if isinstance(model, IForestModel):
        s = iforest_scores(model, x)
        threshold = settings.iforest.score_threshold
        return {"iforest": s}, {"iforest": [verdict_from_score(v, threshold) for v in s]}
    factors = lof_factors(model, x)
    threshold = settings.lof.factor_threshold
    return {"lof": factors}, {"lof": [verdict_from_factor(v, threshold) for v in factors]}
