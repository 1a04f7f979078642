"""eogmark - reversible watermarking of EOG signals with blink-statistic payloads."""

__version__ = "0.1.0"
