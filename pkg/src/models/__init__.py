from src.models.reading import Label, MonthDay, SensorReading, SeriesSegment
from src.models.verdict import Verdict
from src.models.window import Anchor, ScalingParams, SplitSettings, WindowConfig, WindowSample
from src.models.detectors import (
    DetectorKind,
    DetectorSettings,
    EnsembleModel,
    IForestConfig,
    IForestModel,
    KernelSpec,
    LofConfig,
    LofModel,
    OcSvmModel,
    OcSvmTrainConfig,
)
from src.models.report import EvalReport, ModelDocument, RunManifest, SweepRow
from src.models.generation import AnomalySpec, BaselineProfile, GenConfig

__all__ = [
    "Label",
    "MonthDay",
    "SensorReading",
    "SeriesSegment",
    "Verdict",
    "Anchor",
    "ScalingParams",
    "SplitSettings",
    "WindowConfig",
    "WindowSample",
    "DetectorKind",
    "DetectorSettings",
    "EnsembleModel",
    "IForestConfig",
    "IForestModel",
    "KernelSpec",
    "LofConfig",
    "LofModel",
    "OcSvmModel",
    "OcSvmTrainConfig",
    "EvalReport",
    "ModelDocument",
    "RunManifest",
    "SweepRow",
    "AnomalySpec",
    "BaselineProfile",
    "GenConfig",
]
