# eogmark/codec/registry.py
import logging
from typing import Type

from eogmark.codec.base import BaseCodec

logger = logging.getLogger(__name__)


class CodecRegistry:
    """Registry of reversible codecs, keyed by the name stored in signal files and settings."""

    def __init__(self):
        self._codecs: dict[str, Type[BaseCodec]] = {}
        self._instances: dict[str, BaseCodec] = {}

    def register(self, codec_class: Type[BaseCodec]) -> None:
        """Register a codec class. A name may only be bound to one class."""
        existing = self._codecs.get(codec_class.name)
        if existing is not None and existing is not codec_class:
            raise ValueError(
                f"Codec name {codec_class.name!r} already registered by {existing.__name__}"
            )
        self._codecs[codec_class.name] = codec_class
        logger.debug(f"Registered codec {codec_class.name!r}")

    def get(self, name: str) -> Type[BaseCodec] | None:
        return self._codecs.get(name)

    def list_codecs(self) -> list[str]:
        return sorted(self._codecs)

    def get_codec(self, name: str) -> BaseCodec | None:
        """Codec instance by name. Codecs are stateless, so one instance is shared."""
        if name not in self._instances:
            codec_class = self.get(name)
            if codec_class is None:
                return None
            self._instances[name] = codec_class()
        return self._instances[name]


registry = CodecRegistry()


def register_codec(codec_class: Type[BaseCodec]) -> Type[BaseCodec]:
    """Class decorator adding a codec to the global registry."""
    registry.register(codec_class)
    return codec_class
