"""Watermark models for eogmark."""

import math
import struct

from pydantic import BaseModel, ConfigDict, Field, field_validator


class BitString(BaseModel):
    """Ordered bits, most significant first."""

    model_config = ConfigDict(frozen=True)

    bits: tuple[int, ...] = Field(default=())

    @field_validator("bits")
    @classmethod
    def _check_bits(cls, bits: tuple[int, ...]) -> tuple[int, ...]:
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
        return tuple(int(b) for b in bits)

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        """Parse '0'/'1' characters; whitespace grouping and surrounding brackets are ignored."""
        cleaned = "".join(text.split()).strip("[]")
        bad = [c for c in cleaned if c not in "01"]
        if bad:
            raise ValueError(f"invalid bit character {bad[0]!r} in watermark text")
        return cls(bits=tuple(int(c) for c in cleaned))

    def to_text(self, grouped: bool = False) -> str:
        """Render as '0'/'1' characters, optionally in space-separated bytes."""
        text = "".join(str(b) for b in self.bits)
        if grouped:
            return " ".join(text[i : i + 8] for i in range(0, len(text), 8))
        return text

    def complement(self) -> "BitString":
        return BitString(bits=tuple(1 - b for b in self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __add__(self, other: "BitString") -> "BitString":
        return BitString(bits=self.bits + other.bits)


class WatermarkPayload(BaseModel):
    """The two blink statistics carried by a 64-bit watermark.

    Fields are rounded to binary32 (nearest-even) on construction, so the stored
    values are exactly what the watermark encodes.
    """

    model_config = ConfigDict(frozen=True)

    mean_blink_frequency: float  # Hz
    mean_blink_interval: float  # seconds

    @field_validator("mean_blink_frequency", "mean_blink_interval")
    @classmethod
    def _round_binary32(cls, value: float) -> float:
        try:
            return struct.unpack(">f", struct.pack(">f", value))[0]
        except OverflowError:
            raise ValueError(f"{value!r} is outside the binary32 range") from None

    @property
    def has_nan(self) -> bool:
        return math.isnan(self.mean_blink_frequency) or math.isnan(self.mean_blink_interval)
