"""Watermark quality metrics."""

from eogmark.metrics.quality import ber, max_abs_error, metrics_report, snr

__all__ = ["ber", "max_abs_error", "metrics_report", "snr"]
