"""Report models for eogmark."""

import math
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from eogmark.models.watermark import WatermarkPayload


def _inf_as_text(value: float) -> float | str:
    return "inf" if math.isinf(value) and value > 0 else value


class MetricsReport(BaseModel):
    """Embedding quality and extraction accuracy."""

    model_config = ConfigDict(frozen=True)

    snr_linear: float  # +inf when the signals are identical
    snr_db: float
    ber: float = Field(..., ge=0.0, le=1.0)
    max_abs_error: int = Field(..., ge=0)  # quantized units

    def to_json_dict(self) -> dict[str, Any]:
        """Flat dict with +inf rendered as the string "inf"."""
        return {
            "snr_linear": _inf_as_text(self.snr_linear),
            "snr_db": _inf_as_text(self.snr_db),
            "ber": self.ber,
            "max_abs_error": self.max_abs_error,
        }


class VerificationReport(BaseModel):
    """Extracted watermark compared with parameters recomputed from the restored signal."""

    model_config = ConfigDict(frozen=True)

    extracted_bits: str
    extracted_payload: WatermarkPayload
    recomputed_payload: Optional[WatermarkPayload] = None  # None when blinks are insufficient
    payload_match: bool
    ber: Optional[float] = Field(default=None, ge=0.0, le=1.0)  # None without a recomputed payload
    snr_db: Optional[float] = None  # None when the restored signal is all zeros
    restored_identical: Optional[bool] = None  # None without an archive copy to compare

    def to_json_dict(self) -> dict[str, Any]:
        """Dict ready for JSON output with +inf rendered as the string "inf"."""
        data = self.model_dump()
        if self.snr_db is not None:
            data["snr_db"] = _inf_as_text(self.snr_db)
        return data
