""" Grid sweep over history length N and future length P.

For every (N, P) the windows are rebuilt, split chronologically per segment
(first 70% train, last 30% evaluate by default), the ensemble is refit on the
normal reference windows of the training part and evaluated on the held-out
part. Each row's seed derives from (master seed, N, P), so rows are
independent of grid order.

Returns:
    list[SweepRow]: ordered by (N, P); window counts cover all windows of the pair
"""

import logging

import numpy as np

from src.detectors.ensemble import ensemble_member_verdicts, fit_ensemble
from src.errors import DetectorFitError, InfeasibleWindowError, SewerDataError
from src.evaluation.metrics import evaluate
from src.features.scaling import fit_scaling
from src.features.windowing import (
    chronological_split,
    feature_matrix,
    label_verdicts,
    select_reference,
)
from src.models.detectors import DetectorSettings
from src.models.reading import SeriesSegment
from src.models.report import SweepRow
from src.models.verdict import Verdict
from src.models.window import SplitSettings, WindowConfig

logger = logging.getLogger(__name__)


def row_seed(seed: int, n_history: int, p_future: int) -> int:
    state = np.random.SeedSequence([seed, n_history, p_future]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def sweep_row(
    segments: list[SeriesSegment],
    cfg: WindowConfig,
    settings: DetectorSettings,
    split: SplitSettings,
    seed: int,
) -> SweepRow:
    if not any(len(s) >= cfg.span for s in segments):
        raise InfeasibleWindowError(cfg.n_history, cfg.p_future)

    train, held_out = chronological_split(segments, cfg, split.train_fraction)
    every = train + held_out
    reference = select_reference(train, split.exclude_contaminated_history)
    if not reference:
        raise InfeasibleWindowError(cfg.n_history, cfg.p_future, "no normal training windows")
    if not held_out:
        raise InfeasibleWindowError(cfg.n_history, cfg.p_future, "no evaluation windows")

    x_train = feature_matrix(reference)
    try:
        model = fit_ensemble(
            x_train,
            settings,
            seed=row_seed(seed, cfg.n_history, cfg.p_future),
            scaling=fit_scaling(x_train),
        )
    except DetectorFitError as e:
        raise DetectorFitError(f"N={cfg.n_history}, P={cfg.p_future}: {e}") from e
    verdicts = ensemble_member_verdicts(model, feature_matrix(held_out))
    report = evaluate(verdicts["ensemble"], label_verdicts(held_out))

    n_abnormal = sum(1 for w in every if w.label == Verdict.ABNORMAL)
    logger.info(
        f"N={cfg.n_history} P={cfg.p_future}: {len(every)} windows, "
        f"recall={report.recall:.4f} precision={report.precision:.4f} f1={report.f1:.4f}"
    )
    return SweepRow(
        n_history=cfg.n_history,
        p_future=cfg.p_future,
        n_abnormal=n_abnormal,
        n_normal=len(every) - n_abnormal,
        report=report,
    )


def sweep(
    segments: list[SeriesSegment],
    n_values: list[int],
    p_values: list[int],
    settings: DetectorSettings | None = None,
    split: SplitSettings | None = None,
    seed: int = 0,
    on_row=None,
) -> list[SweepRow]:
    if not n_values or not p_values:
        raise SewerDataError("sweep grids must be nonempty")
    settings = settings or DetectorSettings()
    split = split or SplitSettings()

    rows = []
    for n in sorted(set(n_values)):
        for p in sorted(set(p_values)):
            rows.append(sweep_row(segments, WindowConfig(n_history=n, p_future=p), settings, split, seed))
            if on_row is not None:
                on_row(rows[-1])
    return rows
