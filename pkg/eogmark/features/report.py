"""Full feature report for a signal."""

from eogmark.core.exceptions import InsufficientBlinks
from eogmark.features.blinks import blink_stats, count_frequency_outliers, detect_blinks
from eogmark.features.time_domain import compute_feature_set
from eogmark.models.features import BlinkDetectorConfig, FeatureReport
from eogmark.models.signal import Signal


def compute_features(signal: Signal, cfg: BlinkDetectorConfig | None = None) -> FeatureReport:
    """Compute the amplitude features and, when at least two blinks exist, blink statistics."""
    cfg = cfg or BlinkDetectorConfig.from_settings()
    times = detect_blinks(signal, cfg)
    try:
        stats = blink_stats(times)
    except InsufficientBlinks:
        stats = None
    return FeatureReport(
        features=compute_feature_set(signal),
        detector=cfg,
        blink_times=tuple(times),
        blinks=stats,
        frequency_outliers=(
            count_frequency_outliers(stats, cfg.threshold_sigmas) if stats else None
        ),
    )
