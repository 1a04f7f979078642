"""Blink apex detection and blink timing statistics."""

import logging
from typing import Sequence

import numpy as np

from eogmark.core.exceptions import FeatureError, InsufficientBlinks
from eogmark.models.features import BlinkDetectorConfig, BlinkStats
from eogmark.models.signal import Signal

logger = logging.getLogger(__name__)


def detect_blinks(signal: Signal, cfg: BlinkDetectorConfig | None = None) -> list[float]:
    """Find blink apices and return their times in seconds.

    An interior sample i is an apex when it exceeds mean + k * std_dev, is a
    local maximum with at least one strictly lower neighbour, and lies at
    least cfg.refractory seconds after the previously accepted apex.
    """
    cfg = cfg or BlinkDetectorConfig()
    x = np.asarray(signal.samples, dtype=np.float64)
    if x.size < 3:
        return []

    threshold = float(np.mean(x)) + cfg.threshold_sigmas * float(np.std(x))
    left, mid, right = x[:-2], x[1:-1], x[2:]
    is_apex = (mid > threshold) & (left <= mid) & (mid >= right) & ((left < mid) | (right < mid))
    candidates = np.flatnonzero(is_apex) + 1

    rate = signal.sample_rate
    accepted: list[int] = []
    for i in candidates:
        if not accepted or (i - accepted[-1]) / rate >= cfg.refractory:
            accepted.append(int(i))

    if not accepted:
        logger.warning(f"No blinks above threshold {threshold:.6g} in {x.size} samples")
    else:
        logger.debug(f"Detected {len(accepted)} blinks from {candidates.size} candidate apices")
    return [i / rate for i in accepted]


def blink_stats(blink_times: Sequence[float]) -> BlinkStats:
    """Interval and frequency statistics over consecutive blinks.

    Raises:
        InsufficientBlinks: fewer than two blink times
        FeatureError: blink times are not strictly increasing
    """
    if len(blink_times) < 2:
        raise InsufficientBlinks(len(blink_times))

    times = np.asarray(blink_times, dtype=np.float64)
    intervals = np.diff(times)
    if np.any(intervals <= 0):
        raise FeatureError("blink times must be strictly increasing")
    frequencies = 1.0 / intervals
    n = intervals.size

    return BlinkStats(
        blink_times=tuple(float(t) for t in times),
        intervals=tuple(float(t) for t in intervals),
        frequencies=tuple(float(f) for f in frequencies),
        mean_frequency=float(np.mean(frequencies)),
        frequency_std=float(np.std(frequencies)),
        blinks_per_interval=(n + 1) / float(np.sum(intervals)),
        mean_interval=float(np.mean(intervals)),
    )


def count_frequency_outliers(stats: BlinkStats, threshold_sigmas: float) -> int:
    """Count blinks whose frequency exceeds mean + k * std of all blink frequencies."""
    boundary = stats.mean_frequency + threshold_sigmas * stats.frequency_std
    return sum(1 for f in stats.frequencies if f > boundary)
