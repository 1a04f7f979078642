"""Time-domain feature bank."""

from eogmark.features.blinks import blink_stats, count_frequency_outliers, detect_blinks
from eogmark.features.report import compute_features
from eogmark.features.time_domain import (
    auc,
    compute_feature_set,
    mav,
    mean,
    peak,
    std_dev,
    valley,
    variance,
)

__all__ = [
    "auc",
    "blink_stats",
    "compute_feature_set",
    "compute_features",
    "count_frequency_outliers",
    "detect_blinks",
    "mav",
    "mean",
    "peak",
    "std_dev",
    "valley",
    "variance",
]
