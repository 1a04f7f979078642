"""Signal models for eogmark."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, field_validator

from eogmark.core.exceptions import RegionOutOfBounds

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1


class Signal(BaseModel):
    """Real-valued samples (volts) with a sample rate."""

    model_config = ConfigDict(frozen=True)

    samples: tuple[FiniteFloat, ...] = Field(..., min_length=1)
    sample_rate: float = Field(..., gt=0)

    def __len__(self) -> int:
        return len(self.samples)


class QuantizationSpec(BaseModel):
    """Mapping from volts onto integer units."""

    model_config = ConfigDict(frozen=True)

    scale: int = Field(default=1_000_000, ge=1)  # integer units per volt
    rounding: Literal["half_away_from_zero"] = "half_away_from_zero"


class IntSignal(BaseModel):
    """Integer samples plus the scale they were quantized at.

    This is the only representation the codec operates on.
    """

    model_config = ConfigDict(frozen=True)

    samples: tuple[int, ...] = Field(..., min_length=1)
    scale: int = Field(default=1_000_000, ge=1)
    sample_rate: float = Field(..., gt=0)

    @field_validator("samples")
    @classmethod
    def _check_int32(cls, samples: tuple[int, ...]) -> tuple[int, ...]:
        for i, x in enumerate(samples):
            if x < INT32_MIN or x > INT32_MAX:
                raise ValueError(f"sample {i} = {x} is outside the signed 32-bit range")
        return samples

    def __len__(self) -> int:
        return len(self.samples)

    def with_samples(self, samples: list[int] | tuple[int, ...]) -> "IntSignal":
        """Return a validated copy carrying new samples."""
        return IntSignal(samples=tuple(samples), scale=self.scale, sample_rate=self.sample_rate)


class Region(BaseModel):
    """Contiguous span of a carrier consumed as disjoint sample pairs."""

    model_config = ConfigDict(frozen=True)

    offset: int = Field(default=0, ge=0)
    length: int = Field(default=128, gt=0)

    @field_validator("length")
    @classmethod
    def _check_even(cls, length: int) -> int:
        if length % 2:
            raise ValueError(f"odd region length {length}; regions hold whole sample pairs")
        return length

    @property
    def end(self) -> int:
        return self.offset + self.length

    @property
    def pair_count(self) -> int:
        return self.length // 2

    def check_within(self, signal_length: int) -> None:
        """Raise RegionOutOfBounds unless the region fits a signal of this length."""
        if self.end > signal_length:
            raise RegionOutOfBounds(self.offset, self.length, signal_length)
