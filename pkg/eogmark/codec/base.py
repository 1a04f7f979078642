# eogmark/codec/base.py
from abc import ABC, abstractmethod

from eogmark.models.signal import IntSignal, Region
from eogmark.models.watermark import BitString


class BaseCodec(ABC):
    """Base class for reversible watermarking codecs."""

    name: str
    description: str

    @abstractmethod
    def capacity(self, region: Region) -> int:
        """Number of bits the region carries."""

    @abstractmethod
    def embed_region(self, carrier: IntSignal, region: Region, bits: BitString) -> IntSignal:
        """Embed bits into region, leaving the rest of the carrier untouched."""

    @abstractmethod
    def extract_region(self, watermarked: IntSignal, region: Region) -> tuple[IntSignal, BitString]:
        """Recover the carrier and the embedded bits."""
