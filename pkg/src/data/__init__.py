"""Ingestion of flowmeter CSV files and gap-aware segmentation."""

from .csv_io import parse_csv, read_readings, serialize_csv, write_readings
from .segmenter import segment_series

__all__ = ["parse_csv", "read_readings", "serialize_csv", "write_readings", "segment_series"]
