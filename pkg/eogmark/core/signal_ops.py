"""Quantization bridge and region crop/merge for signals."""

import logging
from decimal import ROUND_HALF_UP, Decimal

from eogmark.core.exceptions import LengthMismatch, RangeOverflow, SignalError
from eogmark.models.signal import (
    INT32_MAX,
    IntSignal,
    QuantizationSpec,
    Region,
    Signal,
)

logger = logging.getLogger(__name__)


def _round_half_away(value: Decimal) -> int:
    # ROUND_HALF_UP in decimal rounds ties away from zero
    return int(value.to_integral_value(rounding=ROUND_HALF_UP))


def quantize(signal: Signal, spec: QuantizationSpec | None = None) -> IntSignal:
    """Map volts onto integer units at spec.scale.

    The product is formed on the shortest decimal form of each sample, so a
    sample written as -1.5e-6 is exactly -1.5 units at scale 10^6 and rounds
    to -2.

    Raises:
        RangeOverflow: |sample * scale| rounds to more than 2^31 - 1, so -2^31
            is never produced
    """
    spec = spec or QuantizationSpec()
    scale = Decimal(spec.scale)
    out: list[int] = []
    for i, x in enumerate(signal.samples):
        q = _round_half_away(Decimal(repr(x)) * scale)
        if abs(q) > INT32_MAX:
            raise RangeOverflow(i, q, spec.scale)
        out.append(q)
    logger.debug(f"Quantized {len(out)} samples at scale {spec.scale}")
    return IntSignal(samples=tuple(out), scale=spec.scale, sample_rate=signal.sample_rate)


def dequantize(int_signal: IntSignal) -> Signal:
    """Map integer units back to volts."""
    scale = int_signal.scale
    # int / int is correctly rounded
    return Signal(
        samples=tuple(x / scale for x in int_signal.samples),
        sample_rate=int_signal.sample_rate,
    )


def crop(int_signal: IntSignal, region: Region) -> IntSignal:
    """Return the contiguous sub-signal covered by region."""
    region.check_within(len(int_signal))
    return int_signal.with_samples(int_signal.samples[region.offset : region.end])


def merge(carrier: IntSignal, region: Region, replacement: IntSignal) -> IntSignal:
    """Return carrier with the samples in region replaced."""
    region.check_within(len(carrier))
    if len(replacement) != region.length:
        raise LengthMismatch(region.length, len(replacement), what="replacement length")
    if replacement.scale != carrier.scale or replacement.sample_rate != carrier.sample_rate:
        raise SignalError(
            "replacement must share the carrier's scale and sample rate "
            f"({carrier.scale}, {carrier.sample_rate}); "
            f"got ({replacement.scale}, {replacement.sample_rate})"
        )
    samples = carrier.samples[: region.offset] + replacement.samples + carrier.samples[region.end :]
    return carrier.with_samples(samples)
