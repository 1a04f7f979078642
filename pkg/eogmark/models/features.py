"""Feature models for eogmark."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from eogmark.core.config import settings


class FeatureSet(BaseModel):
    """Time-domain features of one signal.

    Amplitudes are in volts, positions are 0-based sample indices.
    """

    model_config = ConfigDict(frozen=True)

    mean: float
    mav: float = Field(..., ge=0)
    std_dev: float = Field(..., ge=0)
    variance: float = Field(..., ge=0)
    auc: float = Field(..., ge=0)  # volt-samples
    peak_value: float
    peak_index: int = Field(..., ge=0)
    valley_value: float
    valley_index: int = Field(..., ge=0)
    sample_rate: float = Field(..., gt=0)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def peak_time(self) -> float:
        return self.peak_index / self.sample_rate

    @computed_field  # type: ignore[prop-decorator]
    @property
    def valley_time(self) -> float:
        return self.valley_index / self.sample_rate


class BlinkStats(BaseModel):
    """Blink timing statistics derived from detected blink apices.

    Attributes:
        blink_times: Apex times in seconds, strictly increasing
        intervals: T_i, time between consecutive blinks (seconds)
        frequencies: f_i = 1/T_i (Hz)
        mean_frequency: Mean of f_i over all intervals (Hz)
        frequency_std: Population standard deviation of f_i (Hz)
        blinks_per_interval: Blink count divided by total interval length (Hz)
        mean_interval: Mean of T_i (seconds)
    """

    model_config = ConfigDict(frozen=True)

    blink_times: tuple[float, ...] = Field(..., min_length=2)
    intervals: tuple[float, ...] = Field(..., min_length=1)
    frequencies: tuple[float, ...] = Field(..., min_length=1)
    mean_frequency: float
    frequency_std: float = Field(..., ge=0)
    blinks_per_interval: float
    mean_interval: float

    @computed_field  # type: ignore[prop-decorator]
    @property
    def blink_count(self) -> int:
        return len(self.blink_times)


class BlinkDetectorConfig(BaseModel):
    """Configuration for threshold-based blink apex detection.

    Attributes:
        threshold_sigmas: k, apex must exceed mean + k * std_dev
        refractory: Minimum seconds between accepted apices
    """

    model_config = ConfigDict(frozen=True)

    threshold_sigmas: float = Field(
        default=2.0,
        gt=0.0,
        description="Apex must exceed mean + k * std_dev",
    )
    refractory: float = Field(
        default=0.2,
        ge=0.0,
        description="Minimum seconds between accepted apices",
    )

    @classmethod
    def from_settings(cls) -> "BlinkDetectorConfig":
        """Create BlinkDetectorConfig from application settings."""
        return cls(
            threshold_sigmas=settings.blink_threshold_sigmas,
            refractory=settings.blink_refractory_seconds,
        )


class FeatureReport(BaseModel):
    """Everything the feature bank computes for a signal."""

    model_config = ConfigDict(frozen=True)

    features: FeatureSet
    detector: BlinkDetectorConfig
    blink_times: tuple[float, ...]
    blinks: Optional[BlinkStats] = None
    frequency_outliers: Optional[int] = None
