"""Progress tracking shared by the pipeline and CLI."""

from .progress import PipelineProgress, pipeline_progress, console

__all__ = ["PipelineProgress", "pipeline_progress", "console"]
