"""Phase-level progress display for the detection pipeline.

Each pipeline stage (ingest, segmentation, windowing, scaling, fitting,
scoring, evaluation, grid sweeps) owns one hidden rich task that becomes
visible when the stage starts. Stages can be driven by hand
(``start_phase``/``advance``/``complete_phase``) or with the ``phase``
context manager, which also logs the stage's wall time at DEBUG level.

Note:
    - Unknown phase names are ignored, so callers never need to guard.
    - The display writes to stderr through the shared ``console``.
    - ``PipelineProgress(enabled=False)`` keeps the bookkeeping but draws
      nothing.
"""

import logging
import time
from contextlib import contextmanager
from typing import Generator

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)

console = Console(stderr=True)

logger = logging.getLogger(__name__)

PIPELINE_PHASES: dict[str, str] = {
    "Ingest": "Reading flowmeter CSV",
    "Segment": "Splitting at gaps",
    "Window": "Building windows",
    "Scale": "Fitting feature scaling",
    "Fit": "Fitting detector",
    "Score": "Scoring windows",
    "Evaluate": "Computing metrics",
    "Sweep": "Sweeping N x P",
}


class PipelineProgress:
    def __init__(self, enabled: bool = True):
        self.progress = Progress(
            SpinnerColumn(),
            TextColumn("[bold blue]{task.description}"),
            BarColumn(bar_width=24),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=console,
            disable=not enabled,
        )
        self.tasks: dict[str, int] = {}
        self._running = False

    def __enter__(self) -> "PipelineProgress":
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.finish()
        return False

    def start(self) -> None:
        if self._running:
            return
        self._running = True
        self.progress.start()
        for name, description in PIPELINE_PHASES.items():
            self.tasks[name] = self.progress.add_task(description, total=None, visible=False)

    def start_phase(self, name: str, total: int | None = None) -> None:
        if name not in self.tasks:
            return
        self.progress.update(self.tasks[name], visible=True, total=total)
        self.progress.start_task(self.tasks[name])

    def advance(self, name: str, advance: int = 1, detail: str | None = None) -> None:
        if name not in self.tasks:
            return
        task_id = self.tasks[name]
        self.progress.advance(task_id, advance)
        if detail:
            self.progress.update(task_id, description=f"{PIPELINE_PHASES[name]} [{detail}]")

    def complete_phase(self, name: str) -> None:
        if name not in self.tasks:
            return
        task_id = self.tasks[name]
        total = self.progress.tasks[task_id].total
        self.progress.update(
            task_id,
            description=PIPELINE_PHASES[name],
            total=total if total is not None else 1,
            completed=total if total is not None else 1,
        )

    @contextmanager
    def phase(self, name: str, total: int | None = None) -> Generator[None, None, None]:
        started = time.perf_counter()
        self.start_phase(name, total)
        yield
        self.complete_phase(name)
        logger.debug(f"{name} took {time.perf_counter() - started:.2f}s")

    def finish(self) -> None:
        if not self._running:
            return
        self._running = False
        self.progress.stop()


@contextmanager
def pipeline_progress(enabled: bool = True) -> Generator[PipelineProgress, None, None]:
    with PipelineProgress(enabled=enabled) as progress:
        yield progress
