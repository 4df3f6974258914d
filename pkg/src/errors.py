"""Domain errors raised across the pipeline.

All of them derive from ``ValueError`` so callers that only care about
"bad input" can catch a single type; the CLI maps them to exit status 2.
"""


class SewerDataError(ValueError):
    """Base class for invalid data, configuration or model input."""


class CsvParseError(SewerDataError):
    def __init__(self, row: int, column: str, message: str):
        self.row = row
        self.column = column
        self.reason = message
        super().__init__(f"row {row}, column {column}: {message}")


class InfeasibleWindowError(SewerDataError):
    def __init__(self, n_history: int, p_future: int, detail: str = "no windows"):
        self.n_history = n_history
        self.p_future = p_future
        super().__init__(f"{detail} for N={n_history}, P={p_future}")


class DetectorFitError(SewerDataError):
    """A detector's fit precondition does not hold."""


class DimensionMismatchError(SewerDataError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"feature dimension mismatch: expected {expected}, got {got}")


class EpisodeOverlapError(SewerDataError):
    """Two configured anomaly episodes share at least one step."""


class ModelFormatError(SewerDataError):
    """Unknown format version or detector kind in a model document."""
