""" Data models for evaluation reports, sweep rows and persisted artifacts.

Args:
    tp, fp, fn, tn (int): confusion counts with abnormal as the positive class
    precision, recall, f1 (float): metrics in [0, 1]
    n_abnormal, n_normal (int): composition of the labeled set

Note:
    - Every persisted document carries ``format_version`` (currently 1)
    - ``RunManifest`` has no timestamp so reruns stay byte-identical
"""

import math
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from src.models.detectors import DetectorKind, DetectorModel
from src.models.window import Anchor, WindowConfig

FORMAT_VERSION = 1


class EvalReport(BaseModel):
    tp: int = Field(ge=0)
    fp: int = Field(ge=0)
    fn: int = Field(ge=0)
    tn: int = Field(ge=0)
    precision: float = Field(ge=0, le=1)
    recall: float = Field(ge=0, le=1)
    f1: float = Field(ge=0, le=1)
    n_abnormal: int = Field(ge=0)
    n_normal: int = Field(ge=0)

    @property
    def flagged(self) -> int:
        return self.tp + self.fp


class SweepRow(BaseModel):
    n_history: int
    p_future: int
    n_abnormal: int
    n_normal: int
    report: EvalReport

    @property
    def total_windows(self) -> int:
        return self.n_abnormal + self.n_normal


class ModelDocument(BaseModel):
    format_version: Literal[1] = FORMAT_VERSION
    detector: DetectorKind
    window: WindowConfig
    model: DetectorModel


class WindowScore(BaseModel):
    """Scores of one window; an infinite score is stored as null and its member
    listed in ``unbounded`` (LOF next to a cluster of duplicate references)."""

    anchor: Anchor
    label: str
    scores: dict[str, Optional[float]]
    verdicts: dict[str, str]
    unbounded: list[str] = []

    @classmethod
    def from_raw(
        cls, anchor: Anchor, label: str, scores: dict[str, float], verdicts: dict[str, str]
    ) -> "WindowScore":
        return cls(
            anchor=anchor,
            label=label,
            scores={name: value if math.isfinite(value) else None for name, value in scores.items()},
            verdicts=verdicts,
            unbounded=[name for name, value in scores.items() if math.isinf(value)],
        )


class ScoreDocument(BaseModel):
    format_version: Literal[1] = FORMAT_VERSION
    detector: DetectorKind
    window: WindowConfig
    windows: list[WindowScore]


class EvaluationDocument(BaseModel):
    format_version: Literal[1] = FORMAT_VERSION
    detector: DetectorKind
    window: WindowConfig
    n_windows: int
    reports: dict[str, EvalReport]
    # flagged(ensemble) == intersection of member flagged sets; None for single detectors
    intersection_identity: Optional[bool] = None


class SweepDocument(BaseModel):
    format_version: Literal[1] = FORMAT_VERSION
    seed: int
    rows: list[SweepRow]


class RunManifest(BaseModel):
    format_version: Literal[1] = FORMAT_VERSION
    command: str
    arguments: dict[str, Any]
    settings: dict[str, Any]
    seed: Optional[int] = None
    inputs: list[str]
    outputs: list[str]
    tool_version: str
