"""Tests for the N x P grid sweep."""

import pytest

from src.data.segmenter import segment_series
from src.errors import DetectorFitError, InfeasibleWindowError, SewerDataError
from src.evaluation.sweep import row_seed, sweep, sweep_row
from src.models.detectors import DetectorSettings, IForestConfig, LofConfig, OcSvmTrainConfig
from src.models.generation import GenConfig
from src.models.window import SplitSettings, WindowConfig
from src.synth.generator import generate, scatter_episodes

FAST_SETTINGS = DetectorSettings(
    ocsvm=OcSvmTrainConfig(nu=0.1),
    iforest=IForestConfig(n_trees=20, subsample_size=64, score_threshold=0.55),
    lof=LofConfig(k=10, factor_threshold=1.8),
)


@pytest.fixture(scope="module")
def segments():
    cfg = GenConfig(length=1200, seed=5, anomalies=scatter_episodes(1200, 3, seed=5))
    return segment_series(generate(cfg), source_id="synthetic")


def test_history_layout(segments):
    """Test the rows of a history-length sweep."""
    rows = sweep(segments, [5, 10, 15, 20, 25], [7], FAST_SETTINGS)

    assert [(r.n_history, r.p_future) for r in rows] == [(n, 7) for n in (5, 10, 15, 20, 25)]
    totals = [r.total_windows for r in rows]
    assert totals == sorted(totals, reverse=True)
    assert totals[0] == sum(len(s) - 5 - 7 + 1 for s in segments if len(s) >= 12)


def test_future_layout_sorted_and_deduplicated(segments):
    """Test that future lengths are sorted and deduplicated."""
    rows = sweep(segments, [5], [10, 5, 9, 6, 8, 6], FAST_SETTINGS)
    assert [r.p_future for r in rows] == [5, 6, 8, 9, 10]


def test_rows_do_not_depend_on_grid_order(segments, mocker):
    """Test that a row does not depend on the other grid points."""
    on_row = mocker.Mock()

    alone = sweep(segments, [10], [5], FAST_SETTINGS, seed=4)
    together = sweep(segments, [5, 10], [5], FAST_SETTINGS, seed=4, on_row=on_row)

    assert together[1] == alone[0]
    assert on_row.call_count == 2


def test_row_seed_is_stable():
    """Test that row seeds depend only on (seed, N, P)."""
    assert row_seed(0, 5, 7) == row_seed(0, 5, 7)
    assert row_seed(0, 5, 7) != row_seed(0, 7, 5)


def test_infeasible_pair_names_n_and_p(segments):
    """Test that an infeasible pair names N and P."""
    with pytest.raises(InfeasibleWindowError, match="N=2000, P=5"):
        sweep_row(segments, WindowConfig(n_history=2000, p_future=5), FAST_SETTINGS, SplitSettings(), 0)


def test_failed_fit_names_n_and_p(segments):
    """Test that a fit failure on a feasible pair reports which pair it was."""
    starved = FAST_SETTINGS.model_copy(update={"ocsvm": OcSvmTrainConfig(nu=1e-4)})

    with pytest.raises(DetectorFitError, match=r"N=5, P=5: infeasible dual"):
        sweep_row(segments, WindowConfig(n_history=5, p_future=5), starved, SplitSettings(), 0)


def test_empty_grid(segments):
    """Test that an empty grid is rejected."""
    with pytest.raises(SewerDataError):
        sweep(segments, [], [5])
