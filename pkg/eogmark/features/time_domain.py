"""Time-domain amplitude features.

All statistics are population statistics (divisor N) over every sample.
"""

import math

import numpy as np

from eogmark.models.features import FeatureSet
from eogmark.models.signal import Signal


def _as_array(signal: Signal) -> np.ndarray:
    return np.asarray(signal.samples, dtype=np.float64)


def mean(signal: Signal) -> float:
    return float(np.mean(_as_array(signal)))


def mav(signal: Signal) -> float:
    """Mean absolute value."""
    return float(np.mean(np.abs(_as_array(signal))))


def variance(signal: Signal) -> float:
    """Average squared deviation from the mean."""
    return float(np.var(_as_array(signal)))


def std_dev(signal: Signal) -> float:
    return math.sqrt(variance(signal))


def auc(signal: Signal) -> float:
    """Area under the rectified curve, in volt-samples.

    Defined as N * MAV so the two features agree exactly.
    """
    return mav(signal) * len(signal)


def peak(signal: Signal) -> tuple[float, int]:
    """Global maximum and the first index it occurs at."""
    x = _as_array(signal)
    i = int(np.argmax(x))
    return float(x[i]), i


def valley(signal: Signal) -> tuple[float, int]:
    """Global minimum and the first index it occurs at."""
    x = _as_array(signal)
    i = int(np.argmin(x))
    return float(x[i]), i


def compute_feature_set(signal: Signal) -> FeatureSet:
    peak_value, peak_index = peak(signal)
    valley_value, valley_index = valley(signal)
    var = variance(signal)
    return FeatureSet(
        mean=mean(signal),
        mav=mav(signal),
        std_dev=math.sqrt(var),
        variance=var,
        auc=auc(signal),
        peak_value=peak_value,
        peak_index=peak_index,
        valley_value=valley_value,
        valley_index=valley_index,
        sample_rate=signal.sample_rate,
    )
