""" Data models for the synthetic flowmeter series generator.

Args:
    length (int): number of 5-minute steps
    seed (int): generator seed
    baseline (BaselineProfile): diurnal profile of the three channels
    anomalies (list[AnomalySpec]): episodes to plant

Note:
    - sudden_increase needs magnitude > 1, sudden_decrease magnitude in (0, 1)
    - episodes must fit in the series; overlap is checked by the generator

Example:
    >>> cfg = GenConfig(
            length=288,
            seed=7,
            anomalies=[AnomalySpec(kind="sudden_zero", start_step=100, duration=12)],
        )
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

AnomalyKind = Literal["sudden_zero", "sudden_increase", "sudden_decrease", "gap"]


class BaselineProfile(BaseModel):
    mean_flow: float = Field(default=150.0, ge=0)
    mean_level: float = Field(default=0.25, ge=0)
    mean_rate: float = Field(default=0.45, ge=0)
    amplitude: float = Field(default=0.4, ge=0, le=1)
    noise: float = Field(default=0.05, ge=0, le=0.5)
    peak_minute: int = Field(default=480, ge=0, lt=1440)


class AnomalySpec(BaseModel):
    kind: AnomalyKind
    start_step: int = Field(ge=0)
    duration: int = Field(ge=1)
    magnitude: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _check_magnitude(self) -> "AnomalySpec":
        if self.kind == "sudden_increase" and (self.magnitude is None or self.magnitude <= 1):
            raise ValueError("sudden_increase needs magnitude > 1")
        if self.kind == "sudden_decrease" and (
            self.magnitude is None or not 0 < self.magnitude < 1
        ):
            raise ValueError("sudden_decrease needs magnitude in (0, 1)")
        return self

    @property
    def end_step(self) -> int:
        return self.start_step + self.duration


class GenConfig(BaseModel):
    length: int = Field(ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    source_id: str = "synthetic"
    start_day: str = "9/1"
    start_minute: int = Field(default=0, ge=0, lt=1440, multiple_of=5)
    baseline: BaselineProfile = BaselineProfile()
    anomalies: list[AnomalySpec] = []

    @model_validator(mode="after")
    def _check_episodes_fit(self) -> "GenConfig":
        for episode in self.anomalies:
            if episode.end_step > self.length:
                raise ValueError(
                    f"{episode.kind} episode at step {episode.start_step} "
                    f"(duration {episode.duration}) does not fit in length {self.length}"
                )
        return self
