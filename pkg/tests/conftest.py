"""Shared fixtures: small hand-built series, the published sample rows and
settings helpers, so tests never depend on large files."""

import numpy as np
import pytest

from src.config.settings import get_settings
from src.models.reading import Label, MonthDay, SensorReading, SeriesSegment
from src.models.generation import AnomalySpec, GenConfig


# --- Builders ---

def make_readings(
    rows: list[tuple[float, float, float, bool]],
    day: str = "9/7",
    start_minute: int = 0,
) -> list[SensorReading]:
    """Consecutive 5-minute readings from (flow, level, rate, abnormal) tuples."""
    current = MonthDay.parse(day)
    minute = start_minute
    readings = []
    for flow, level, rate, abnormal in rows:
        if minute >= 1440:
            current, minute = current.next_day(), minute - 1440
        readings.append(
            SensorReading(
                day=current,
                time_of_day=minute,
                instantaneous_flow=flow,
                liquid_level=level,
                flow_rate=rate,
                label=Label.ABNORMAL if abnormal else Label.UNLABELED,
            )
        )
        minute += 5
    return readings


def make_segment(labels: list[bool], source_id: str = "series") -> SeriesSegment:
    rows = [(100.0 + i, 0.2 + 0.001 * i, 0.4, flag) for i, flag in enumerate(labels)]
    return SeriesSegment(readings=make_readings(rows), source_id=source_id)


@pytest.fixture
def reading_builder():
    return make_readings


@pytest.fixture
def segment_builder():
    return make_segment


# --- Sample Data Fixtures ---

@pytest.fixture
def sudden_zero_csv():
    """The sudden-zero block of the reference sample: two zero rows at 11:40 and 11:45."""
    return (
        "day,hour,instantaneous_flow,liquid_level,flow_rate,label\n"
        "9/7,11:30,129.538,0.268,0.43,/\n"
        "9/7,11:35,131.027,0.27,0.431,/\n"
        "9/7,11:40,0,0,0,abnormal\n"
        "9/7,11:45,0,0,0,abnormal\n"
        "9/7,11:50,127.46,0.266,0.428,/\n"
    )


@pytest.fixture
def sudden_increase_csv():
    return (
        "day,hour,instantaneous_flow,liquid_level,flow_rate,label\n"
        "9/12,7:00,133.021,0.27,0.44,/\n"
        "9/12,7:05,193.759,0.291,0.537,/\n"
        "9/12,7:10,930.471,0.702,1.093,abnormal\n"
    )


@pytest.fixture
def blob_matrix():
    """A tight 2-D Gaussian blob of 200 points."""
    rng = np.random.default_rng(11)
    return rng.normal(0.0, 1.0, size=(200, 2))


@pytest.fixture
def small_gen_config():
    return GenConfig(
        length=600,
        seed=3,
        anomalies=[
            AnomalySpec(kind="sudden_zero", start_step=100, duration=12),
            AnomalySpec(kind="sudden_increase", start_step=300, duration=20, magnitude=5.0),
            AnomalySpec(kind="gap", start_step=450, duration=10),
        ],
    )


# --- Settings Fixtures ---

@pytest.fixture(autouse=True)
def clear_settings_cache(monkeypatch):
    """Settings are cached per path; every test starts from the defaults."""
    monkeypatch.delenv("SEWER_CONFIG", raising=False)
    monkeypatch.delenv("SEWER_LOG_LEVEL", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings_file(tmp_path):
    """Write a YAML settings file and return its path."""
    def _write(text: str):
        path = tmp_path / "config.yaml"
        path.write_text(text, encoding="utf-8")
        return path
    return _write
