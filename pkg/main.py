"""
Main script for the sewer flowmeter early-warning pipeline.
Parses the command line and dispatches to the gen, window, train, score,
eval, sweep or replay command.

Args:
    None. The script is executed directly; see ``python main.py --help``.

Returns:
    Exit code 0 on success, 2 on usage, configuration or data errors,
    1 on internal failures.

Note:
    - Logs go to stderr through rich; artifacts are written as JSON/CSV
    - Every run leaves a ``<output>.manifest.json`` that ``replay`` re-runs
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
