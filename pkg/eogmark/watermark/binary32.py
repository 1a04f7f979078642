"""IEEE-754 binary32 watermark words.

A watermark is the big-endian binary32 encoding of the mean blink frequency
followed by that of the mean blink interval: 64 bits, sign bit first.
"""

import logging
import math
import struct

from eogmark.core.exceptions import NotFinite, WrongLength
from eogmark.models.watermark import BitString, WatermarkPayload

logger = logging.getLogger(__name__)

WORD_BITS = 32
WATERMARK_BITS = 2 * WORD_BITS


def _word(x: float) -> int:
    """Raw binary32 word of x, rounded to nearest-even. NaN and inf pass through."""
    return struct.unpack(">I", struct.pack(">f", x))[0]


def encode_f32(x: float) -> BitString:
    """Encode x as 32 bits, MSB first.

    Raises:
        NotFinite: x is NaN or infinite, or overflows binary32
    """
    if not math.isfinite(x):
        raise NotFinite(f"{x!r} cannot be carried by a watermark")
    try:
        word = _word(x)
    except OverflowError:
        raise NotFinite(f"{x!r} overflows binary32") from None
    return BitString.from_text(f"{word:032b}")


def decode_f32(bits: BitString) -> float:
    """Decode 32 bits into a float. NaN words decode to NaN with a warning."""
    if len(bits) != WORD_BITS:
        raise WrongLength(WORD_BITS, len(bits))
    word = int(bits.to_text(), 2)
    value = struct.unpack(">f", word.to_bytes(4, byteorder="big"))[0]
    if math.isnan(value):
        logger.warning(f"Watermark word {word:#010x} decodes to NaN")
    return value


def pack(payload: WatermarkPayload) -> BitString:
    """Frequency word followed by interval word."""
    return encode_f32(payload.mean_blink_frequency) + encode_f32(payload.mean_blink_interval)


def unpack(bits: BitString) -> WatermarkPayload:
    if len(bits) != WATERMARK_BITS:
        raise WrongLength(WATERMARK_BITS, len(bits))
    return WatermarkPayload(
        mean_blink_frequency=decode_f32(BitString(bits=bits.bits[:WORD_BITS])),
        mean_blink_interval=decode_f32(BitString(bits=bits.bits[WORD_BITS:])),
    )


def verify(extracted: WatermarkPayload, recomputed: WatermarkPayload) -> bool:
    """True iff both fields have bit-identical binary32 words."""
    return _word(extracted.mean_blink_frequency) == _word(
        recomputed.mean_blink_frequency
    ) and _word(extracted.mean_blink_interval) == _word(recomputed.mean_blink_interval)
