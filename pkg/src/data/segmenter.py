import logging

from src.models.reading import SAMPLING_MINUTES, SensorReading, SeriesSegment

logger = logging.getLogger(__name__)


def segment_series(
    readings: list[SensorReading], source_id: str = "series"
) -> list[SeriesSegment]:
    """Split readings into runs of exactly 5-minute spacing.

    Args:
        readings (list[SensorReading]): readings sorted by (day, time_of_day).
        source_id (str): identifier of the monitoring point or file.

    Returns:
        list[SeriesSegment]: contiguous segments whose concatenation restores
        the input. Any step other than +5 minutes starts a new segment; gaps
        are never imputed.

    Example:
        >>> segments = segment_series(readings, source_id="site_017")
        >>> [len(s) for s in segments]
    """
    if not readings:
        return []

    runs: list[list[SensorReading]] = [[readings[0]]]
    for prev, cur in zip(readings, readings[1:]):
        if cur.minute_ordinal - prev.minute_ordinal == SAMPLING_MINUTES:
            runs[-1].append(cur)
        else:
            logger.debug(f"Gap between {prev.day} {prev.hour} and {cur.day} {cur.hour}")
            runs.append([cur])

    segments = [SeriesSegment(readings=run, source_id=source_id) for run in runs]
    logger.info(f"Segmented {len(readings)} readings into {len(segments)} segments")
    return segments
