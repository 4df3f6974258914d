"""From-scratch anomaly detectors and their intersection ensemble."""

from .ensemble import (
    EnsembleDecision,
    bag_intersection,
    ensemble_decide,
    ensemble_member_verdicts,
    fit_ensemble,
)
from .iforest import average_path_length, fit_iforest, iforest_decide, iforest_score, iforest_scores
from .lof import fit_lof, lof_decide, lof_factor, lof_factors, lof_training_factors
from .ocsvm import fit_ocsvm, ocsvm_decide, ocsvm_g, ocsvm_scores
from .registry import fit_detector, score_detector

__all__ = [
    "EnsembleDecision",
    "bag_intersection",
    "ensemble_decide",
    "ensemble_member_verdicts",
    "fit_ensemble",
    "average_path_length",
    "fit_iforest",
    "iforest_decide",
    "iforest_score",
    "iforest_scores",
    "fit_lof",
    "lof_decide",
    "lof_factor",
    "lof_factors",
    "lof_training_factors",
    "fit_ocsvm",
    "ocsvm_decide",
    "ocsvm_g",
    "ocsvm_scores",
    "fit_detector",
    "score_detector",
]
