"""Artifact persistence and plain-text reports."""

from .report_generator import (
    SWEEP_COLUMNS,
    load_model_document,
    render_sweep_table,
    save_document,
    save_table,
)

__all__ = [
    "SWEEP_COLUMNS",
    "load_model_document",
    "render_sweep_table",
    "save_document",
    "save_table",
]
