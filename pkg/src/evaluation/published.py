"""Reported operating points (recall %, precision %, F1), used as fixtures for the F1 formula.

The N=10 row of the history-length sweep is a known misprint: its printed
precision 58.06 does not reproduce the printed F1, while 98.06 does.
"""

from typing import NamedTuple


class PublishedMetric(NamedTuple):
    table: str
    setting: str
    recall: float
    precision: float
    f1: float
    misprint: bool = False


HISTORY_LENGTH_ROWS = [
    PublishedMetric("history", "N=5 P=7", 59.24, 99.09, 0.742),
    PublishedMetric("history", "N=10 P=7", 59.76, 58.06, 0.739, misprint=True),
    PublishedMetric("history", "N=15 P=7", 57.79, 95.70, 0.721),
    PublishedMetric("history", "N=20 P=7", 51.08, 93.42, 0.66),
    PublishedMetric("history", "N=25 P=7", 13.49, 89.47, 0.234),
]

FUTURE_LENGTH_ROWS = [
    PublishedMetric("future", "N=5 P=5", 63.58, 98.21, 0.772),
    PublishedMetric("future", "N=5 P=6", 61.45, 98.21, 0.756),
    PublishedMetric("future", "N=5 P=8", 37.04, 100.0, 0.541),
    PublishedMetric("future", "N=5 P=9", 35.57, 100.0, 0.525),
    PublishedMetric("future", "N=5 P=10", 34.34, 100.0, 0.511),
]

DETECTOR_ROWS = [
    PublishedMetric("detectors", "One Class SVM", 63.85, 98.21, 0.774),
    PublishedMetric("detectors", "Isolation Forest", 100.0, 25.63, 0.408),
    PublishedMetric("detectors", "Local Outlier Factor", 83.24, 58.30, 0.686),
    PublishedMetric("detectors", "Bagging", 63.85, 98.21, 0.774),
]

WEAK_MEMBER_ROWS = [
    PublishedMetric("weak-members", "One Class SVM", 100.0, 2.38, 0.046),
    PublishedMetric("weak-members", "Isolation Forest", 55.56, 55.56, 0.556),
    PublishedMetric("weak-members", "Local Outlier Factor", 55.56, 3.97, 0.074),
    PublishedMetric("weak-members", "Bagging", 55.56, 83.33, 0.667),
]

PUBLISHED_ROWS = HISTORY_LENGTH_ROWS + FUTURE_LENGTH_ROWS + DETECTOR_ROWS + WEAK_MEMBER_ROWS

CORRECTED_PRECISION = {("history", "N=10 P=7"): 98.06}
