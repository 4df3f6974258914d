""" Pipeline runner orchestrating ingest, windowing, fitting, scoring and evaluation.

    Args:
        data_path (Path): flowmeter CSV in the corpus format.
        window (WindowConfig): history length N and future length P.
        kind (DetectorKind): ocsvm, iforest, lof or ensemble.
        seed (int): master seed for the randomized detectors.
        settings (Settings): resolved configuration.

    Returns:
        ModelDocument / ScoreDocument / EvaluationDocument / SweepDocument.

    Raises:
        InfeasibleWindowError: the data yields no windows (or no normal
        reference windows) for the requested N and P.
        DimensionMismatchError: a model's feature dimension does not fit its
        stored window configuration.

    Note:
        - Detectors are fitted on normal-labeled windows only; with
          ``split.exclude_contaminated_history`` windows whose history holds
          an abnormal reading are left out as well
        - Scaling is fitted on the reference windows and stored in the model
        - Progress is tracked per phase with rich
"""

import logging
from pathlib import Path

from src.config.settings import Settings
from src.data.csv_io import read_readings
from src.data.segmenter import segment_series
from src.detectors.ensemble import MEMBERS
from src.detectors.registry import fit_detector, score_detector
from src.errors import DimensionMismatchError, InfeasibleWindowError
from src.evaluation.metrics import evaluate, flagged_indices
from src.evaluation.sweep import sweep
from src.features.scaling import fit_scaling
from src.features.windowing import (
    build_dataset,
    feature_matrix,
    label_verdicts,
    select_reference,
)
from src.models.detectors import DetectorKind
from src.models.reading import SeriesSegment
from src.models.report import (
    EvaluationDocument,
    ModelDocument,
    ScoreDocument,
    SweepDocument,
    WindowScore,
)
from src.models.window import WindowConfig, WindowSample
from src.utils.progress import pipeline_progress

logger = logging.getLogger(__name__)


def load_segments(data_path: Path) -> list[SeriesSegment]:
    readings = read_readings(data_path)
    return segment_series(readings, source_id=data_path.stem)


def _windows_for(data_path: Path, window: WindowConfig, progress) -> list[WindowSample]:
    with progress.phase("Ingest"):
        readings = read_readings(data_path)
    with progress.phase("Segment"):
        segments = segment_series(readings, source_id=data_path.stem)
    with progress.phase("Window"):
        samples = build_dataset(segments, window)

    if not samples:
        raise InfeasibleWindowError(window.n_history, window.p_future)
    return samples


def train_detector(
    data_path: Path,
    window: WindowConfig,
    kind: DetectorKind,
    seed: int,
    settings: Settings,
) -> ModelDocument:
    with pipeline_progress() as progress:
        samples = _windows_for(data_path, window, progress)
        reference = select_reference(samples, settings.split.exclude_contaminated_history)
        if not reference:
            raise InfeasibleWindowError(
                window.n_history, window.p_future, "no normal training windows"
            )
        logger.info(f"Reference windows: {len(reference)} of {len(samples)}")

        with progress.phase("Scale"):
            x = feature_matrix(reference)
            scaling = fit_scaling(x)
        with progress.phase("Fit"):
            model = fit_detector(kind, x, settings.detectors, seed, scaling)

    return ModelDocument(detector=kind, window=window, model=model)


def _check_dimension(document: ModelDocument) -> None:
    if document.window.feature_dim != document.model.n_features:
        raise DimensionMismatchError(document.model.n_features, document.window.feature_dim)


def score_windows(document: ModelDocument, data_path: Path, settings: Settings) -> ScoreDocument:
    _check_dimension(document)
    with pipeline_progress() as progress:
        samples = _windows_for(data_path, document.window, progress)

        with progress.phase("Score"):
            scores, verdicts = score_detector(
                document.model, settings.detectors, feature_matrix(samples)
            )

    windows = [
        WindowScore.from_raw(
            anchor=sample.anchor,
            label=sample.label.value,
            scores={name: float(values[i]) for name, values in scores.items()},
            verdicts={name: values[i].value for name, values in verdicts.items()},
        )
        for i, sample in enumerate(samples)
    ]
    return ScoreDocument(detector=document.detector, window=document.window, windows=windows)


def evaluate_model(
    document: ModelDocument, data_path: Path, settings: Settings
) -> EvaluationDocument:
    _check_dimension(document)
    with pipeline_progress() as progress:
        samples = _windows_for(data_path, document.window, progress)

        with progress.phase("Score"):
            _, verdicts = score_detector(
                document.model, settings.detectors, feature_matrix(samples)
            )
        with progress.phase("Evaluate"):
            labels = label_verdicts(samples)
            reports = {name: evaluate(values, labels) for name, values in verdicts.items()}

    identity = None
    if document.detector == DetectorKind.ENSEMBLE:
        members = [flagged_indices(verdicts[name]) for name in MEMBERS]
        identity = flagged_indices(verdicts["ensemble"]) == set.intersection(*members)
        if not identity:
            logger.error("Ensemble flagged set differs from the intersection of its members")

    for name, report in reports.items():
        logger.info(
            f"{name}: precision={report.precision:.4f} recall={report.recall:.4f} f1={report.f1:.4f}"
        )
    return EvaluationDocument(
        detector=document.detector,
        window=document.window,
        n_windows=len(samples),
        reports=reports,
        intersection_identity=identity,
    )


def run_sweep(
    data_path: Path,
    n_grid: list[int],
    p_grid: list[int],
    seed: int,
    settings: Settings,
) -> SweepDocument:
    with pipeline_progress() as progress:
        with progress.phase("Ingest"):
            segments = load_segments(data_path)

        with progress.phase("Sweep", total=len(set(n_grid)) * len(set(p_grid))):
            rows = sweep(
                segments,
                n_grid,
                p_grid,
                settings.detectors,
                settings.split,
                seed=seed,
                on_row=lambda row: progress.advance(
                    "Sweep", detail=f"N={row.n_history} P={row.p_future}"
                ),
            )

    return SweepDocument(seed=seed, rows=rows)
