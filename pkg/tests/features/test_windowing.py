"""Tests for the dual sliding-window transform and the chronological split."""

import numpy as np
import pytest

from src.data.csv_io import parse_csv
from src.data.segmenter import segment_series
from src.features.windowing import (
    build_dataset,
    build_windows,
    chronological_split,
    feature_matrix,
    label_verdicts,
    select_reference,
    windows_to_csv,
)
from src.models.verdict import Verdict
from src.models.window import WindowConfig


class TestBuildWindows:
    def test_count_formula(self, segment_builder):
        """Test the window count of a segment."""
        samples = build_windows(segment_builder([False] * 15), WindowConfig(n_history=5, p_future=5))
        assert len(samples) == 6

    def test_too_short_segment_yields_nothing(self, segment_builder):
        """Test that a segment shorter than N + P yields no windows."""
        assert build_windows(segment_builder([False] * 9), WindowConfig(n_history=5, p_future=5)) == []

    def test_features_oldest_first(self, segment_builder):
        """Test that features run oldest to newest, channel by channel."""
        segment = segment_builder([False] * 4)

        sample = build_windows(segment, WindowConfig(n_history=2, p_future=1))[0]

        first, second = segment.readings[0], segment.readings[1]
        assert sample.features == [*first.channels, *second.channels]
        assert sample.anchor.time_of_day == segment.readings[2].time_of_day

    def test_abnormal_future_block(self, sudden_zero_csv):
        """Test that an abnormal future reading labels the window abnormal."""
        segment = segment_series(parse_csv(sudden_zero_csv))[0]

        # history 11:30-11:35, future 11:40-11:45 holds both zero rows
        sample = build_windows(segment, WindowConfig(n_history=2, p_future=2))[0]

        assert sample.label == Verdict.ABNORMAL
        assert sample.anchor.time_of_day == 700
        assert not sample.history_contaminated

    def test_unlabeled_future_is_normal(self, segment_builder):
        """Test that an unlabeled future labels the window normal."""
        samples = build_windows(segment_builder([True, True, False, False]), WindowConfig(n_history=2, p_future=2))

        assert [s.label for s in samples] == [Verdict.NORMAL]
        assert samples[0].history_contaminated

    def test_random_segments_follow_the_label_rule(self, segment_builder):
        """Test the label rule on random segments."""
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            length = int(rng.integers(1, 30))
            labels = (rng.random(length) < 0.2).tolist()
            cfg = WindowConfig(n_history=int(rng.integers(1, 8)), p_future=int(rng.integers(1, 8)))

            samples = build_windows(segment_builder(labels), cfg)

            assert len(samples) == max(0, length - cfg.n_history - cfg.p_future + 1)
            for i, s in enumerate(samples):
                future = labels[i + cfg.n_history:i + cfg.span]
                history = labels[i:i + cfg.n_history]
                assert s.label == Verdict.from_flag(any(future))
                assert s.history_contaminated == any(history)
                assert len(s.features) == cfg.feature_dim


class TestDataset:
    def test_windows_never_cross_segments(self, segment_builder):
        """Test that windows never span two segments."""
        segments = [segment_builder([False] * 12, "a"), segment_builder([False] * 3, "b")]

        samples = build_dataset(segments, WindowConfig(n_history=2, p_future=2))

        assert len(samples) == 9
        assert {s.anchor.source_id for s in samples} == {"a"}

    def test_chronological_split_per_segment(self, segment_builder):
        """Test the per-segment chronological split."""
        segments = [segment_builder([False] * 14, "a"), segment_builder([False] * 24, "b")]
        cfg = WindowConfig(n_history=2, p_future=2)

        train, held_out = chronological_split(segments, cfg, 0.7)

        # 11 and 21 windows -> floor(7.7)=7 and floor(14.7)=14 train
        assert len(train) == 21
        assert len(held_out) == 11
        first_held = [w for w in held_out if w.anchor.source_id == "a"][0]
        last_train = [w for w in train if w.anchor.source_id == "a"][-1]
        assert first_held.anchor.time_of_day > last_train.anchor.time_of_day

    def test_select_reference(self, segment_builder):
        """Test that reference windows are normal with clean history."""
        labels = [False] * 6 + [True] + [False] * 6
        samples = build_windows(segment_builder(labels), WindowConfig(n_history=2, p_future=2))

        strict = select_reference(samples)
        loose = select_reference(samples, exclude_contaminated=False)

        assert all(s.label == Verdict.NORMAL and not s.history_contaminated for s in strict)
        assert len(loose) - len(strict) == 2
        assert all(s.label == Verdict.NORMAL for s in loose)

    def test_matrix_and_labels(self, segment_builder):
        """Test the feature matrix and label list."""
        samples = build_windows(segment_builder([False] * 5 + [True]), WindowConfig(n_history=2, p_future=1))

        assert feature_matrix(samples).shape == (4, 6)
        assert label_verdicts(samples)[-1] == Verdict.ABNORMAL
        assert feature_matrix([]).shape == (0, 0)


def test_windows_to_csv(segment_builder):
    """Test the windows CSV header and rows."""
    cfg = WindowConfig(n_history=2, p_future=1)
    samples = build_windows(segment_builder([False, False, True]), cfg)

    lines = windows_to_csv(samples, cfg).splitlines()

    assert lines[0] == (
        "instantaneous_flow_1,liquid_level_1,flow_rate_1,"
        "instantaneous_flow_2,liquid_level_2,flow_rate_2,label"
    )
    assert lines[1].endswith(",abnormal")
    assert len(lines) == 2


@pytest.mark.parametrize("n,p", [(0, 5), (5, 0)])
def test_window_config_rejects_non_positive(n, p):
    """Test that N and P must be positive."""
    with pytest.raises(ValueError):
        WindowConfig(n_history=n, p_future=p)
