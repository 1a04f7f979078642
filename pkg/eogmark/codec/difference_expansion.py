"""Difference-expansion reversible watermarking.

Each pair of consecutive integer samples (m1, m2) is replaced by a pair whose
difference is 2d + bit, where d = m1 - m2, while the floored average stays
fixed. Floor division is used throughout, so negative differences round-trip
the same way as positive ones.
"""

import logging
from typing import NamedTuple

from eogmark.codec.base import BaseCodec
from eogmark.codec.registry import register_codec
from eogmark.core.exceptions import CapacityMismatch, ExpansionOverflow
from eogmark.models.signal import INT32_MAX, INT32_MIN, IntSignal, Region
from eogmark.models.watermark import BitString

logger = logging.getLogger(__name__)


class Pair(NamedTuple):
    """Two consecutive carrier samples."""

    m1: int
    m2: int


class EmbeddedPair(NamedTuple):
    """A pair after one watermark bit has been expanded into its difference."""

    m1p: int
    m2p: int


def _in_range(x: int) -> bool:
    return INT32_MIN <= x <= INT32_MAX


def _expand(m1: int, m2: int, bit: int) -> tuple[int, int]:
    d = m1 - m2
    a = (m1 + m2) // 2
    dw = 2 * d + bit
    return a + (dw + 1) // 2, a - dw // 2


def embed_pair(p: Pair, bit: int) -> EmbeddedPair:
    """Embed one bit into a pair.

    Raises:
        ExpansionOverflow: either output sample leaves the signed 32-bit range
    """
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    m1p, m2p = _expand(p.m1, p.m2, bit)
    if not (_in_range(m1p) and _in_range(m2p)):
        raise ExpansionOverflow(
            [], detail=f"pair ({p.m1}, {p.m2}) expands to ({m1p}, {m2p}), outside 32-bit range"
        )
    return EmbeddedPair(m1p, m2p)


def extract_pair(e: EmbeddedPair) -> tuple[Pair, int]:
    """Recover the original pair and the embedded bit."""
    dp = e.m1p - e.m2p
    ap = (e.m1p + e.m2p) // 2
    bit = dp % 2
    d = dp // 2
    return Pair(ap + (d + 1) // 2, ap - d // 2), bit


def embed_region(carrier: IntSignal, region: Region, bits: BitString) -> IntSignal:
    """Embed bits into the pairs of region, one bit per pair, in index order.

    Fails atomically: either every pair is expanded or the carrier is left alone.

    Raises:
        RegionOutOfBounds: region does not fit the carrier
        CapacityMismatch: len(bits) != region.length // 2
        ExpansionOverflow: lists every pair index (within the region) that overflows
    """
    region.check_within(len(carrier))
    if len(bits) != region.pair_count:
        raise CapacityMismatch(region.pair_count, len(bits))

    samples = list(carrier.samples)
    failing: list[int] = []
    for i, bit in enumerate(bits.bits):
        j = region.offset + 2 * i
        m1p, m2p = _expand(samples[j], samples[j + 1], bit)
        if _in_range(m1p) and _in_range(m2p):
            samples[j], samples[j + 1] = m1p, m2p
        else:
            failing.append(i)
    if failing:
        logger.debug(f"Embedding aborted, {len(failing)} non-expandable pairs")
        raise ExpansionOverflow(failing)

    logger.debug(f"Embedded {len(bits)} bits into region [{region.offset}, {region.end})")
    return carrier.with_samples(samples)


def extract_region(watermarked: IntSignal, region: Region) -> tuple[IntSignal, BitString]:
    """Recover the carrier and bits from a region produced by embed_region.

    Any region decodes: on an unmarked carrier the bits are the parities of
    the pair differences. Restored samples lie between the floored average
    and the received samples, so they never leave the 32-bit range.
    """
    region.check_within(len(watermarked))
    samples = list(watermarked.samples)
    bits: list[int] = []
    for i in range(region.pair_count):
        j = region.offset + 2 * i
        pair, bit = extract_pair(EmbeddedPair(samples[j], samples[j + 1]))
        samples[j], samples[j + 1] = pair.m1, pair.m2
        bits.append(bit)
    return watermarked.with_samples(samples), BitString(bits=tuple(bits))


@register_codec
class DifferenceExpansionCodec(BaseCodec):
    """One bit per disjoint sample pair, no location map."""

    name = "difference_expansion"
    description = "Difference expansion over consecutive disjoint sample pairs"

    def capacity(self, region: Region) -> int:
        return region.pair_count

    def embed_region(self, carrier: IntSignal, region: Region, bits: BitString) -> IntSignal:
        return embed_region(carrier, region, bits)

    def extract_region(self, watermarked: IntSignal, region: Region) -> tuple[IntSignal, BitString]:
        return extract_region(watermarked, region)
