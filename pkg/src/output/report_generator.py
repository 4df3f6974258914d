""" Writes and reads the pipeline's JSON artifacts and renders sweep tables.

    Every artifact is a pydantic document with a ``format_version`` field,
    written as indented UTF-8 JSON. Model documents are checked for a known
    version and a consistent detector kind on load. Sweep rows render as an
    aligned ASCII table in the column order
    start, end, N, P, abnormal, normal, recall%, precision%, F1.

    Raises:
        ModelFormatError: unknown format_version or detector kind mismatch.

    Note:
        - start/end hour columns are not modeled and print as "-"
        - Output is deterministic so repeated runs are byte-identical
"""

import io
import json
import logging
from pathlib import Path

from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.table import Table

from src.errors import ModelFormatError
from src.models.report import FORMAT_VERSION, ModelDocument, SweepRow


logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["start", "end", "N", "P", "abnormal", "normal", "recall%", "precision%", "F1"]


def save_document(document: BaseModel, output_path: Path) -> None:
    output_path.parent.mkdir(parents=True, exist_ok=True)

    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(
            document.model_dump(mode="json"), f, ensure_ascii=False, indent=2, allow_nan=False
        )
        f.write("\n")

    logger.info(f"Saved: {output_path}")


def load_model_document(path: Path) -> ModelDocument:
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)

    version = data.get("format_version") if isinstance(data, dict) else None
    if version != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported model format_version {version!r} in {path}")

    document = ModelDocument.model_validate(data)
    if document.model.kind != document.detector.value:
        raise ModelFormatError(
            f"detector {document.detector.value!r} does not match model kind {document.model.kind!r}"
        )
    return document


def render_sweep_table(rows: list[SweepRow]) -> str:
    table = Table(box=box.ASCII, show_edge=True)
    for column in SWEEP_COLUMNS:
        table.add_column(column, justify="right")

    for row in rows:
        report = row.report
        table.add_row(
            "-",
            "-",
            str(row.n_history),
            str(row.p_future),
            str(row.n_abnormal),
            str(row.n_normal),
            f"{100 * report.recall:.2f}",
            f"{100 * report.precision:.2f}",
            f"{report.f1:.3f}",
        )

    buffer = io.StringIO()
    Console(file=buffer, width=200, color_system=None, force_terminal=False).print(table)
    return buffer.getvalue()


def save_table(text: str, output_path: Path) -> None:
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    logger.info(f"Table saved to: {output_path}")
