""" Data models for flowmeter readings and contiguous series segments.

A reading is one 5-minute record of a monitoring point: instantaneous flow
(m³/h), liquid level (m) and flow rate (m/s), plus an optional abnormal
label. Days carry month and day only; ordering assumes a single year.

Note:
    - All models are frozen pydantic models; validation runs on construction
    - ``minute_ordinal`` turns (day, time_of_day) into a monotone minute count
      so the 5-minute spacing rule can be checked across midnight

Example:
    >>> reading = SensorReading(
            day=MonthDay(month=9, day=7),
            time_of_day=680,
            instantaneous_flow=0.0,
            liquid_level=0.0,
            flow_rate=0.0,
            label=Label.ABNORMAL,
        )
    >>> print(reading.hour)
"""

from datetime import date
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SAMPLING_MINUTES = 5
MINUTES_PER_DAY = 1440
# Leap reference year so 2/29 is accepted.
_REFERENCE_YEAR = 2000


class Label(str, Enum):
    UNLABELED = "unlabeled"
    ABNORMAL = "abnormal"


class MonthDay(BaseModel):
    model_config = ConfigDict(frozen=True)

    month: int = Field(ge=1, le=12)
    day: int = Field(ge=1, le=31)

    @model_validator(mode="after")
    def _check_calendar(self) -> "MonthDay":
        try:
            date(_REFERENCE_YEAR, self.month, self.day)
        except ValueError as e:
            raise ValueError(f"invalid calendar day {self.month}/{self.day}") from e
        return self

    @classmethod
    def parse(cls, text: str) -> "MonthDay":
        month, sep, day = text.strip().partition("/")
        if not sep:
            raise ValueError(f"expected month/day, got {text!r}")
        return cls(month=int(month), day=int(day))

    @property
    def day_of_year(self) -> int:
        return date(_REFERENCE_YEAR, self.month, self.day).timetuple().tm_yday

    def next_day(self) -> "MonthDay":
        current = date(_REFERENCE_YEAR, self.month, self.day)
        if current.month == 12 and current.day == 31:
            raise ValueError("day ordering does not wrap past 12/31")
        following = date.fromordinal(current.toordinal() + 1)
        return MonthDay(month=following.month, day=following.day)

    def __str__(self) -> str:
        return f"{self.month}/{self.day}"


class SensorReading(BaseModel):
    model_config = ConfigDict(frozen=True)

    day: MonthDay
    time_of_day: int = Field(ge=0, le=MINUTES_PER_DAY - SAMPLING_MINUTES)
    instantaneous_flow: float = Field(ge=0, allow_inf_nan=False)
    liquid_level: float = Field(ge=0, allow_inf_nan=False)
    flow_rate: float = Field(ge=0, allow_inf_nan=False)
    label: Label = Label.UNLABELED

    @field_validator("time_of_day")
    @classmethod
    def _on_grid(cls, value: int) -> int:
        if value % SAMPLING_MINUTES != 0:
            raise ValueError("time not on 5-minute grid")
        return value

    @property
    def minute_ordinal(self) -> int:
        return (self.day.day_of_year - 1) * MINUTES_PER_DAY + self.time_of_day

    @property
    def hour(self) -> str:
        return f"{self.time_of_day // 60}:{self.time_of_day % 60:02d}"

    @property
    def channels(self) -> tuple[float, float, float]:
        return (self.instantaneous_flow, self.liquid_level, self.flow_rate)

    @property
    def is_abnormal(self) -> bool:
        return self.label == Label.ABNORMAL


class SeriesSegment(BaseModel):
    model_config = ConfigDict(frozen=True)

    readings: list[SensorReading]
    source_id: str = "series"

    @model_validator(mode="after")
    def _check_spacing(self) -> "SeriesSegment":
        for prev, cur in zip(self.readings, self.readings[1:]):
            if cur.minute_ordinal - prev.minute_ordinal != SAMPLING_MINUTES:
                raise ValueError(
                    f"readings {prev.day} {prev.hour} and {cur.day} {cur.hour} "
                    "are not 5 minutes apart"
                )
        return self

    def __len__(self) -> int:
        return len(self.readings)
