"""Early anomaly warning for sewer flowmeter time series."""

__version__ = "0.1.0"
