""" Companion artifact paths derived from a command's primary output.

   Args:
       output (Path): primary artifact written by a command (CSV, model, report).

   Returns:
       RunPaths: dataclass with the output, its manifest and its text table.

    Note:
        - Manifests always sit next to their outputs: ``<output>.manifest.json``
        - Sweep tables go to ``<output>.txt``

    Example:
        >>> paths = get_run_paths(Path("runs/model.json"))
        >>> print(paths.manifest)    # runs/model.json.manifest.json
        """

from dataclasses import dataclass
from pathlib import Path


@dataclass
class RunPaths:
    output: Path
    manifest: Path
    table: Path


def get_run_paths(output: Path) -> RunPaths:
    return RunPaths(
        output=output,
        manifest=output.with_name(output.name + ".manifest.json"),
        table=output.with_name(output.name + ".txt"),
    )
