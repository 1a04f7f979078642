"""Reversible watermarking codecs."""

from eogmark.codec.base import BaseCodec
from eogmark.codec.difference_expansion import (
    DifferenceExpansionCodec,
    EmbeddedPair,
    Pair,
    embed_pair,
    embed_region,
    extract_pair,
    extract_region,
)
from eogmark.codec.registry import CodecRegistry, register_codec, registry

__all__ = [
    "BaseCodec",
    "CodecRegistry",
    "DifferenceExpansionCodec",
    "EmbeddedPair",
    "Pair",
    "embed_pair",
    "embed_region",
    "extract_pair",
    "extract_region",
    "register_codec",
    "registry",
]
