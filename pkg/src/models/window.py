""" Data models for the dual sliding-window transform.

N consecutive history readings become one feature vector of length 3·N
(flow, level, rate per step, oldest first); the following P readings decide
the label.

Args:
    n_history (int): number of 5-minute history steps (N)
    p_future (int): number of 5-minute future steps (P)

Note:
    - ``anchor`` is the first future step, i.e. the instant the warning refers to
    - ``history_contaminated`` marks windows whose history already holds an
      abnormal reading; labels never depend on it
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.reading import MonthDay
from src.models.verdict import Verdict

CHANNELS = ("instantaneous_flow", "liquid_level", "flow_rate")


class WindowConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_history: int = Field(default=5, ge=1)
    p_future: int = Field(default=5, ge=1)

    @property
    def feature_dim(self) -> int:
        return len(CHANNELS) * self.n_history

    @property
    def span(self) -> int:
        return self.n_history + self.p_future


class Anchor(BaseModel):
    model_config = ConfigDict(frozen=True)

    source_id: str
    day: MonthDay
    time_of_day: int


class WindowSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    features: list[float]
    label: Verdict
    anchor: Anchor
    history_contaminated: bool = False


class ScalingParams(BaseModel):
    """Per-dimension standardization; zero-variance dimensions keep mean 0, scale 1."""

    model_config = ConfigDict(frozen=True)

    mean: list[float]
    scale: list[float]

    @model_validator(mode="after")
    def _check_lengths(self) -> "ScalingParams":
        if len(self.mean) != len(self.scale):
            raise ValueError("mean and scale must have the same length")
        if any(s <= 0 for s in self.scale):
            raise ValueError("scale entries must be positive")
        return self

    @property
    def dim(self) -> int:
        return len(self.mean)

    @classmethod
    def identity(cls, dim: int) -> "ScalingParams":
        return cls(mean=[0.0] * dim, scale=[1.0] * dim)


class SplitSettings(BaseModel):
    """How labeled windows are divided into the reference (training) and evaluation sets."""

    model_config = ConfigDict(frozen=True)

    train_fraction: float = Field(default=0.7, gt=0, lt=1)
    exclude_contaminated_history: bool = True
