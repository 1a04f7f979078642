"""Models module for eogmark.

This module contains the domain data models: signals, watermark payloads,
feature sets and reports.
"""

from eogmark.models.features import BlinkDetectorConfig, BlinkStats, FeatureReport, FeatureSet
from eogmark.models.reports import MetricsReport, VerificationReport
from eogmark.models.signal import (
    INT32_MAX,
    INT32_MIN,
    IntSignal,
    QuantizationSpec,
    Region,
    Signal,
)
from eogmark.models.watermark import BitString, WatermarkPayload

__all__ = [
    # Signal models
    "INT32_MAX",
    "INT32_MIN",
    "Signal",
    "IntSignal",
    "QuantizationSpec",
    "Region",
    # Watermark models
    "BitString",
    "WatermarkPayload",
    # Feature models
    "BlinkDetectorConfig",
    "BlinkStats",
    "FeatureSet",
    "FeatureReport",
    # Reports
    "MetricsReport",
    "VerificationReport",
]
