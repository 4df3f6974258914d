""" Reading and writing the flowmeter CSV corpus format.

Header: ``day,hour,instantaneous_flow,liquid_level,flow_rate,label``.
Day is month/day (``9/7``), hour is ``H:MM`` on the 5-minute grid, the three
measurements are plain decimals and the label is ``/`` (or empty) for
unlabeled rows and ``abnormal`` otherwise.

Raises:
    CsvParseError: naming the file line number and the offending column.

Example:
    >>> readings = parse_csv("day,hour,instantaneous_flow,liquid_level,flow_rate,label\\n"
    ...                      "9/7,11:40,0,0,0,abnormal\\n")
    >>> readings[0].time_of_day
    700
"""

import csv
import io
import logging
import math
from pathlib import Path
from typing import Iterable, TextIO

from src.errors import CsvParseError
from src.models.reading import SAMPLING_MINUTES, Label, MonthDay, SensorReading

logger = logging.getLogger(__name__)

HEADER = ["day", "hour", "instantaneous_flow", "liquid_level", "flow_rate", "label"]
UNLABELED_TOKENS = {"", "/"}
MEASUREMENT_COLUMNS = HEADER[2:5]


def _parse_hour(text: str, row: int) -> int:
    hours, sep, minutes = text.strip().partition(":")
    try:
        if not sep:
            raise ValueError
        h, m = int(hours), int(minutes)
    except ValueError:
        raise CsvParseError(row, "hour", f"malformed time {text!r}") from None
    if not (0 <= h <= 23 and 0 <= m <= 59):
        raise CsvParseError(row, "hour", f"time out of range {text!r}")
    if m % SAMPLING_MINUTES != 0:
        raise CsvParseError(row, "hour", "time not on 5-minute grid")
    return h * 60 + m


def _parse_measurement(text: str, row: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise CsvParseError(row, column, f"malformed number {text!r}") from None
    if not math.isfinite(value):
        raise CsvParseError(row, column, f"non-finite number {text!r}")
    if value < 0:
        raise CsvParseError(row, column, f"negative measurement {text!r}")
    return value


def _parse_label(text: str, row: int) -> Label:
    token = text.strip()
    if token in UNLABELED_TOKENS:
        return Label.UNLABELED
    if token == Label.ABNORMAL.value:
        return Label.ABNORMAL
    raise CsvParseError(row, "label", f"unknown label token {token!r}")


def parse_csv(source: str | TextIO) -> list[SensorReading]:
    stream = io.StringIO(source) if isinstance(source, str) else source
    reader = csv.reader(stream)

    header = next(reader, None)
    if header is None or [h.strip() for h in header] != HEADER:
        raise CsvParseError(1, "header", f"expected header {','.join(HEADER)}")

    readings: list[SensorReading] = []
    for fields in reader:
        row = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        if len(fields) != len(HEADER):
            raise CsvParseError(row, "*", f"expected {len(HEADER)} fields, got {len(fields)}")

        try:
            day = MonthDay.parse(fields[0])
        except ValueError as e:
            raise CsvParseError(row, "day", str(e)) from None

        flow, level, rate = (
            _parse_measurement(fields[i], row, column)
            for i, column in enumerate(MEASUREMENT_COLUMNS, start=2)
        )
        readings.append(
            SensorReading(
                day=day,
                time_of_day=_parse_hour(fields[1], row),
                instantaneous_flow=flow,
                liquid_level=level,
                flow_rate=rate,
                label=_parse_label(fields[5], row),
            )
        )

    logger.debug(f"Parsed {len(readings)} readings")
    return readings


def serialize_csv(readings: Iterable[SensorReading]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for r in readings:
        writer.writerow([
            str(r.day),
            r.hour,
            repr(r.instantaneous_flow),
            repr(r.liquid_level),
            repr(r.flow_rate),
            "/" if r.label == Label.UNLABELED else r.label.value,
        ])
    return out.getvalue()


def read_readings(path: Path) -> list[SensorReading]:
    logger.info(f"Loading readings: {path}")
    with open(path, "r", encoding="utf-8", newline="") as f:
        return parse_csv(f)


def write_readings(path: Path, readings: Iterable[SensorReading]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(serialize_csv(readings))
    logger.info(f"Readings saved to: {path}")
