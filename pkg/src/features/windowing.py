""" Dual sliding-window transform of contiguous series segments.

For a segment of length L, every anchor i (stride one 5-minute step) yields
one sample: the N readings before the anchor become the feature vector, the
P readings from the anchor on decide the label. A window is abnormal iff at
least one of its future readings is labeled abnormal.

Args:
    segment (SeriesSegment): contiguous readings, 5 minutes apart
    cfg (WindowConfig): history length N and future length P

Returns:
    list[WindowSample]: max(0, L - N - P + 1) samples, anchor order

Note:
    - Windows never straddle segment boundaries
    - History labels never affect the label; they only set
      ``history_contaminated``
"""

import csv
import io
import logging
import math

import numpy as np

from src.models.reading import SeriesSegment
from src.models.verdict import Verdict
from src.models.window import CHANNELS, Anchor, WindowConfig, WindowSample

logger = logging.getLogger(__name__)


def build_windows(segment: SeriesSegment, cfg: WindowConfig) -> list[WindowSample]:
    readings = segment.readings
    count = max(0, len(readings) - cfg.span + 1)
    if count == 0:
        return []

    values = np.array([r.channels for r in readings], dtype=float)
    # prefix counts of abnormal readings make each block test O(1)
    abnormal = np.concatenate(([0], np.cumsum([r.is_abnormal for r in readings])))

    samples = []
    n, p = cfg.n_history, cfg.p_future
    for i in range(count):
        anchor = readings[i + n]
        future_hits = abnormal[i + n + p] - abnormal[i + n]
        history_hits = abnormal[i + n] - abnormal[i]
        samples.append(
            WindowSample(
                features=values[i:i + n].ravel().tolist(),
                label=Verdict.from_flag(future_hits > 0),
                anchor=Anchor(
                    source_id=segment.source_id,
                    day=anchor.day,
                    time_of_day=anchor.time_of_day,
                ),
                history_contaminated=bool(history_hits > 0),
            )
        )
    return samples


def build_dataset(segments: list[SeriesSegment], cfg: WindowConfig) -> list[WindowSample]:
    samples = [w for segment in segments for w in build_windows(segment, cfg)]
    logger.info(
        f"Built {len(samples)} windows (N={cfg.n_history}, P={cfg.p_future}) "
        f"from {len(segments)} segments"
    )
    return samples


def chronological_split(
    segments: list[SeriesSegment], cfg: WindowConfig, train_fraction: float
) -> tuple[list[WindowSample], list[WindowSample]]:
    """Per segment, the first floor(f * count) windows train and the rest evaluate."""
    train, held_out = [], []
    for segment in segments:
        windows = build_windows(segment, cfg)
        cut = math.floor(train_fraction * len(windows))
        train.extend(windows[:cut])
        held_out.extend(windows[cut:])
    return train, held_out


def feature_matrix(samples: list[WindowSample]) -> np.ndarray:
    if not samples:
        return np.empty((0, 0))
    return np.array([s.features for s in samples], dtype=float)


def label_verdicts(samples: list[WindowSample]) -> list[Verdict]:
    return [s.label for s in samples]


def windows_to_csv(samples: list[WindowSample], cfg: WindowConfig) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = [
        f"{channel}_{step}"
        for step in range(1, cfg.n_history + 1)
        for channel in CHANNELS
    ]
    writer.writerow(header + ["label"])
    for s in samples:
        writer.writerow([repr(v) for v in s.features] + [s.label.value])
    return out.getvalue()


def select_reference(samples: list[WindowSample], exclude_contaminated: bool = True) -> list[WindowSample]:
    """Normal-labeled windows used to fit the one-class detectors."""
    return [
        s for s in samples
        if s.label == Verdict.NORMAL and not (exclude_contaminated and s.history_contaminated)
    ]
