"""Watermark payload codec."""

from eogmark.watermark.binary32 import (
    WATERMARK_BITS,
    WORD_BITS,
    decode_f32,
    encode_f32,
    pack,
    unpack,
    verify,
)

__all__ = [
    "WATERMARK_BITS",
    "WORD_BITS",
    "decode_f32",
    "encode_f32",
    "pack",
    "unpack",
    "verify",
]
