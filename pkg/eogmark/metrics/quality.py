"""Embedding quality measures: SNR, BER and maximum absolute error."""

import math
from fractions import Fraction

from eogmark.core.exceptions import EmptyBits, LengthMismatch, SignalError, ZeroSignal
from eogmark.models.reports import MetricsReport
from eogmark.models.signal import IntSignal
from eogmark.models.watermark import BitString


def _check_comparable(original: IntSignal, watermarked: IntSignal) -> None:
    if len(original) != len(watermarked):
        raise LengthMismatch(len(original), len(watermarked), what="signal length")
    if original.scale != watermarked.scale:
        raise SignalError(f"scale mismatch: {original.scale} vs {watermarked.scale}")


def snr(original: IntSignal, watermarked: IntSignal) -> tuple[float, float]:
    """Signal power over distortion power, linear and in dB.

    Power sums are exact integers and the ratio is formed before any rounding,
    so scaling both signals by the same integer leaves the result unchanged.
    Identical signals give (inf, inf).

    Raises:
        LengthMismatch: signals differ in length
        ZeroSignal: the original is all zeros
    """
    _check_comparable(original, watermarked)
    signal_power = sum(x * x for x in original.samples)
    if signal_power == 0:
        raise ZeroSignal("original signal has zero power; SNR is undefined")
    noise_power = sum((x - y) * (x - y) for x, y in zip(original.samples, watermarked.samples))
    if noise_power == 0:
        return math.inf, math.inf
    # the 1/N factors cancel
    linear = float(Fraction(signal_power, noise_power))
    return linear, 10.0 * math.log10(linear)


def ber(reference: BitString, received: BitString) -> float:
    """Fraction of bit positions that differ."""
    if len(reference) != len(received):
        raise LengthMismatch(len(reference), len(received), what="bit string length")
    if len(reference) == 0:
        raise EmptyBits("bit error rate of empty bit strings is undefined")
    errors = sum(1 for a, b in zip(reference.bits, received.bits) if a != b)
    return errors / len(reference)


def max_abs_error(original: IntSignal, watermarked: IntSignal) -> int:
    if len(original) != len(watermarked):
        raise LengthMismatch(len(original), len(watermarked), what="signal length")
    return max(abs(x - y) for x, y in zip(original.samples, watermarked.samples))


def metrics_report(
    original: IntSignal,
    watermarked: IntSignal,
    reference_bits: BitString,
    received_bits: BitString,
) -> MetricsReport:
    linear, db = snr(original, watermarked)
    return MetricsReport(
        snr_linear=linear,
        snr_db=db,
        ber=ber(reference_bits, received_bits),
        max_abs_error=max_abs_error(original, watermarked),
    )
