"""Tests for the corpus CSV reader and writer."""

import io

import pytest

from src.data.csv_io import HEADER, parse_csv, read_readings, serialize_csv, write_readings
from src.errors import CsvParseError
from src.models.reading import Label, MonthDay

HEADER_LINE = ",".join(HEADER) + "\n"


class TestParseCsv:
    def test_sudden_zero_row(self):
        """Test parsing of a sudden-zero row."""
        readings = parse_csv(HEADER_LINE + "9/7,11:40,0,0,0,abnormal\n")

        assert len(readings) == 1
        r = readings[0]
        assert r.day == MonthDay(month=9, day=7)
        assert r.time_of_day == 700
        assert r.channels == (0.0, 0.0, 0.0)
        assert r.label == Label.ABNORMAL

    def test_unlabeled_slash_token(self):
        """Test that "/" reads as unlabeled."""
        r = parse_csv(HEADER_LINE + "9/12,7:05,193.759,0.291,0.537,/\n")[0]

        assert r.label == Label.UNLABELED
        assert r.instantaneous_flow == pytest.approx(193.759)
        assert r.hour == "7:05"

    def test_empty_label_is_unlabeled(self):
        """Test that an empty label reads as unlabeled."""
        r = parse_csv(HEADER_LINE + "9/12,7:05,1,1,1,\n")[0]
        assert r.label == Label.UNLABELED

    def test_accepts_text_stream(self, sudden_zero_csv):
        """Test parsing from a text stream."""
        readings = parse_csv(io.StringIO(sudden_zero_csv))
        assert [r.is_abnormal for r in readings] == [False, False, True, True, False]

    def test_off_grid_time(self):
        """Test that a time off the 5-minute grid is rejected."""
        with pytest.raises(CsvParseError, match="time not on 5-minute grid") as exc:
            parse_csv(HEADER_LINE + "9/7,11:03,1.0,0.1,0.1,/\n")
        assert exc.value.row == 2
        assert exc.value.column == "hour"

    def test_malformed_number_names_row_and_column(self):
        """Test that a bad number names its row and column."""
        text = HEADER_LINE + "9/7,11:00,1,1,1,/\n9/7,11:05,1,abc,1,/\n"
        with pytest.raises(CsvParseError) as exc:
            parse_csv(text)
        assert exc.value.row == 3
        assert exc.value.column == "liquid_level"
        assert "row 3, column liquid_level" in str(exc.value)

    def test_unknown_label_token(self):
        """Test that an unknown label is rejected."""
        with pytest.raises(CsvParseError, match="unknown label token") as exc:
            parse_csv(HEADER_LINE + "9/7,11:00,1,1,1,broken\n")
        assert exc.value.column == "label"

    @pytest.mark.parametrize("value", ["-1", "nan", "inf"])
    def test_rejects_negative_and_non_finite(self, value):
        """Test that negative and non-finite values are rejected."""
        with pytest.raises(CsvParseError):
            parse_csv(HEADER_LINE + f"9/7,11:00,{value},1,1,/\n")

    @pytest.mark.parametrize("hour", ["24:00", "11", "x:05", "11:60"])
    def test_rejects_bad_hours(self, hour):
        """Test that malformed hours are rejected."""
        with pytest.raises(CsvParseError) as exc:
            parse_csv(HEADER_LINE + f"9/7,{hour},1,1,1,/\n")
        assert exc.value.column == "hour"

    def test_rejects_bad_day(self):
        """Test that impossible days are rejected."""
        with pytest.raises(CsvParseError) as exc:
            parse_csv(HEADER_LINE + "2/30,11:00,1,1,1,/\n")
        assert exc.value.column == "day"

    def test_rejects_wrong_field_count(self):
        """Test that rows with the wrong field count are rejected."""
        with pytest.raises(CsvParseError, match="expected 6 fields"):
            parse_csv(HEADER_LINE + "9/7,11:00,1,1,/\n")

    def test_rejects_wrong_header(self):
        """Test that a wrong header is rejected."""
        with pytest.raises(CsvParseError) as exc:
            parse_csv("day,hour,flow,level,rate,label\n")
        assert exc.value.row == 1

    def test_skips_blank_lines(self):
        """Test that blank lines are skipped."""
        readings = parse_csv(HEADER_LINE + "9/7,11:00,1,1,1,/\n\n9/7,11:05,1,1,1,/\n")
        assert len(readings) == 2


class TestSerializeCsv:
    def test_round_trip(self, sudden_zero_csv, sudden_increase_csv):
        """Test that serializing and parsing returns the readings."""
        for text in (sudden_zero_csv, sudden_increase_csv):
            readings = parse_csv(text)
            assert parse_csv(serialize_csv(readings)) == readings

    def test_header_and_tokens(self, sudden_zero_csv):
        """Test the written header, hour format and label tokens."""
        lines = serialize_csv(parse_csv(sudden_zero_csv)).splitlines()

        assert lines[0] == ",".join(HEADER)
        assert lines[1].endswith(",/")
        assert lines[3] == "9/7,11:40,0.0,0.0,0.0,abnormal"

    def test_file_round_trip(self, tmp_path, sudden_zero_csv):
        """Test writing and reading a file."""
        readings = parse_csv(sudden_zero_csv)
        path = tmp_path / "nested" / "site.csv"

        write_readings(path, readings)

        assert read_readings(path) == readings
