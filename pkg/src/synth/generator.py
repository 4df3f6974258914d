""" Synthetic labeled flowmeter series with planted anomaly episodes.

The baseline is a diurnal cosine with its peak at ``peak_minute`` (morning by
default) times multiplicative Gaussian noise, clipped at zero. Episodes then
act on all three channels together:

    sudden_zero       flow, level and rate read exactly 0
    sudden_increase   channels multiplied by magnitude > 1
    sudden_decrease   channels multiplied by magnitude in (0, 1)
    gap               rows removed (discontinuous transmission)

Every surviving in-episode reading is labeled abnormal, everything else is
unlabeled. Output depends only on the config.

Raises:
    EpisodeOverlapError: if two episodes share a step.
"""

import logging
from datetime import date
from typing import Sequence

import numpy as np

from src.errors import EpisodeOverlapError, SewerDataError
from src.models.generation import AnomalyKind, AnomalySpec, GenConfig
from src.models.reading import MINUTES_PER_DAY, SAMPLING_MINUTES, Label, MonthDay, SensorReading

logger = logging.getLogger(__name__)

OBSERVABLE_KINDS: tuple[AnomalyKind, ...] = ("sudden_zero", "sudden_increase", "sudden_decrease")


def _check_overlap(anomalies: Sequence[AnomalySpec]) -> None:
    ordered = sorted(anomalies, key=lambda a: a.start_step)
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.start_step < prev.end_step:
            raise EpisodeOverlapError(
                f"{prev.kind} episode [{prev.start_step}, {prev.end_step}) overlaps "
                f"{cur.kind} episode [{cur.start_step}, {cur.end_step})"
            )


def _calendar(cfg: GenConfig) -> tuple[list[MonthDay], np.ndarray]:
    start = MonthDay.parse(cfg.start_day)
    minutes = cfg.start_minute + SAMPLING_MINUTES * np.arange(cfg.length)
    day_offsets = minutes // MINUTES_PER_DAY
    first = date(2000, start.month, start.day).toordinal()
    days = []
    for offset in range(int(day_offsets[-1]) + 1):
        d = date.fromordinal(first + offset)
        if d.year != 2000:
            raise SewerDataError("generated series runs past 12/31; days carry no year")
        days.append(MonthDay(month=d.month, day=d.day))
    return [days[o] for o in day_offsets], minutes % MINUTES_PER_DAY


def _baseline(cfg: GenConfig, time_of_day: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    profile = cfg.baseline
    phase = 2.0 * np.pi * (time_of_day - profile.peak_minute) / MINUTES_PER_DAY
    diurnal = 1.0 + profile.amplitude * np.cos(phase)
    means = np.array([profile.mean_flow, profile.mean_level, profile.mean_rate])
    noise = 1.0 + profile.noise * rng.standard_normal((cfg.length, 3))
    return np.maximum(diurnal[:, None] * means[None, :] * noise, 0.0)


def generate(cfg: GenConfig) -> list[SensorReading]:
    _check_overlap(cfg.anomalies)
    rng = np.random.default_rng(cfg.seed)

    days, time_of_day = _calendar(cfg)
    values = _baseline(cfg, time_of_day, rng)
    abnormal = np.zeros(cfg.length, dtype=bool)
    keep = np.ones(cfg.length, dtype=bool)

    for episode in cfg.anomalies:
        span = slice(episode.start_step, episode.end_step)
        if episode.kind == "gap":
            keep[span] = False
            continue
        if episode.kind == "sudden_zero":
            values[span] = 0.0
        else:
            values[span] *= episode.magnitude
        abnormal[span] = True

    values = np.round(values, 3)
    readings = [
        SensorReading(
            day=days[t],
            time_of_day=int(time_of_day[t]),
            instantaneous_flow=float(values[t, 0]),
            liquid_level=float(values[t, 1]),
            flow_rate=float(values[t, 2]),
            label=Label.ABNORMAL if abnormal[t] else Label.UNLABELED,
        )
        for t in np.flatnonzero(keep)
    ]
    logger.info(
        f"Generated {len(readings)} readings with {len(cfg.anomalies)} episodes "
        f"({int(abnormal[keep].sum())} abnormal)"
    )
    return readings


def scatter_episodes(
    length: int,
    count: int,
    seed: int,
    kinds: Sequence[AnomalyKind] = OBSERVABLE_KINDS,
    duration: tuple[int, int] = (60, 100),
    increase: tuple[float, float] = (4.0, 6.0),
    decrease: tuple[float, float] = (0.1, 0.2),
) -> list[AnomalySpec]:
    """Plant ``count`` non-overlapping episodes, one per equal slot, kinds in rotation."""
    if count < 1 or not kinds:
        raise SewerDataError("need at least one episode and one kind")
    slot = length // count
    if slot < duration[1] + 1:
        raise SewerDataError(
            f"{count} episodes of up to {duration[1]} steps do not fit in {length} steps"
        )

    rng = np.random.default_rng(seed)
    episodes = []
    for i in range(count):
        kind = kinds[i % len(kinds)]
        steps = int(rng.integers(duration[0], duration[1] + 1))
        start = i * slot + int(rng.integers(1, slot - steps + 1))
        magnitude = None
        if kind == "sudden_increase":
            magnitude = float(rng.uniform(*increase))
        elif kind == "sudden_decrease":
            magnitude = float(rng.uniform(*decrease))
        episodes.append(
            AnomalySpec(kind=kind, start_step=start, duration=steps, magnitude=magnitude)
        )
    return episodes


def abnormal_steps(cfg: GenConfig) -> set[int]:
    """Step indices that the generator labels abnormal (union of non-gap episodes)."""
    return {
        t
        for episode in cfg.anomalies
        if episode.kind != "gap"
        for t in range(episode.start_step, episode.end_step)
    }


def expected_count(cfg: GenConfig) -> int:
    removed = sum(episode.duration for episode in cfg.anomalies if episode.kind == "gap")
    return cfg.length - removed
