"""Line-based text format for plain and quantized signals.

    #WMEOG 1
    #rate 250.0
    #scale 1000000                  quantized files only
    #region 0 128                   watermarked files only
    #bits 64                        watermarked files only
    #detector 2.0 0.2               watermarked files only
    <one sample per line>

Plain files hold decimal reals; quantized files hold decimal integers, so a
quantized file survives write -> read bit-exactly. A file whose first line is
not the magic line is read as bare plain samples.
"""

import logging
import math
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, FiniteFloat, ValidationError

from eogmark.core.exceptions import SignalFileError
from eogmark.core.signal_ops import dequantize, quantize
from eogmark.models.features import BlinkDetectorConfig
from eogmark.models.signal import INT32_MAX, INT32_MIN, IntSignal, QuantizationSpec, Region, Signal

logger = logging.getLogger(__name__)

MAGIC = "#WMEOG 1"


class SignalKind(str, Enum):
    """Sample representation stored in a file."""

    PLAIN = "plain"
    QUANTIZED = "quantized"


class SignalFile(BaseModel):
    """Parsed contents of a signal file. Exactly one of signal / int_signal is set."""

    model_config = ConfigDict(frozen=True)

    signal: Optional[Signal] = None
    int_signal: Optional[IntSignal] = None
    region: Optional[Region] = None
    bit_count: Optional[int] = None
    detector: Optional[BlinkDetectorConfig] = None

    @property
    def kind(self) -> SignalKind:
        return SignalKind.QUANTIZED if self.int_signal is not None else SignalKind.PLAIN

    @property
    def is_watermarked(self) -> bool:
        return self.region is not None

    def as_signal(self) -> Signal:
        """Real-valued view, dequantizing when needed."""
        if self.int_signal is not None:
            return dequantize(self.int_signal)
        assert self.signal is not None
        return self.signal

    def as_int_signal(self, scale: int) -> IntSignal:
        """Integer view; plain files are quantized at scale."""
        if self.int_signal is not None:
            return self.int_signal
        assert self.signal is not None
        return quantize(self.signal, QuantizationSpec(scale=scale))


class _Header(BaseModel):
    rate: Optional[FiniteFloat] = None
    scale: Optional[int] = None
    region: Optional[tuple[int, int]] = None
    bits: Optional[int] = None
    detector: Optional[tuple[FiniteFloat, FiniteFloat]] = None


_HEADER_ARITY = {"rate": 1, "scale": 1, "region": 2, "bits": 1, "detector": 2}


def _parse_header_line(header: dict, line: str, line_number: int) -> None:
    key, *values = line[1:].split()
    if key not in _HEADER_ARITY:
        raise SignalFileError(f"unknown header field {key!r}", line_number)
    if key in header:
        raise SignalFileError(f"duplicate header field {key!r}", line_number)
    if len(values) != _HEADER_ARITY[key]:
        raise SignalFileError(
            f"header {key!r} takes {_HEADER_ARITY[key]} value(s), got {len(values)}", line_number
        )
    try:
        _Header.model_validate({key: values[0] if len(values) == 1 else tuple(values)})
    except ValidationError:
        raise SignalFileError(f"invalid value for header {key!r}: {' '.join(values)}", line_number)
    header[key] = values[0] if len(values) == 1 else tuple(values)


def parse_signal_text(text: str, rate: float | None = None) -> SignalFile:
    """Parse signal file text.

    Args:
        text: File contents
        rate: Sample rate in Hz; overrides the header of a plain file and is
            required when a plain file has none

    Raises:
        SignalFileError: malformed content, with the 1-based line number when known
    """
    lines = text.splitlines()
    raw_header: dict = {}
    has_magic = bool(lines) and lines[0].strip().startswith("#WMEOG")
    if has_magic and lines[0].strip() != MAGIC:
        raise SignalFileError(f"unsupported format version {lines[0].strip()!r}", 1)

    sample_lines: list[tuple[int, str]] = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or (has_magic and line_number == 1):
            continue
        if line.startswith("#"):
            if not has_magic:
                raise SignalFileError("header line without the #WMEOG magic line", line_number)
            if sample_lines:
                raise SignalFileError("header line after samples", line_number)
            _parse_header_line(raw_header, line, line_number)
            continue
        sample_lines.append((line_number, line))

    header = _Header.model_validate(raw_header)
    if not sample_lines:
        raise SignalFileError("file contains no samples", len(lines) or None)
    last_line = sample_lines[-1][0]

    quantized = header.scale is not None
    samples: list = []
    for line_number, token in sample_lines:
        if quantized:
            try:
                value = int(token)
            except ValueError:
                raise SignalFileError(f"expected an integer sample, got {token!r}", line_number)
            if value < INT32_MIN or value > INT32_MAX:
                raise SignalFileError(f"sample {value} outside the 32-bit range", line_number)
        else:
            try:
                value = float(token)
            except ValueError:
                raise SignalFileError(f"expected a real sample, got {token!r}", line_number)
            if not math.isfinite(value):
                raise SignalFileError(f"non-finite sample {token!r}", line_number)
        samples.append(value)

    if quantized:
        sample_rate = header.rate
        if sample_rate is None:
            raise SignalFileError("quantized file lacks a #rate header", 1)
    else:
        sample_rate = rate if rate is not None else header.rate
        if sample_rate is None:
            raise SignalFileError("sample rate unknown: add a #rate header or pass --rate")
    if sample_rate <= 0:
        raise SignalFileError(f"sample rate must be positive, got {sample_rate}")

    if not quantized and (
        header.region is not None or header.bits is not None or header.detector is not None
    ):
        raise SignalFileError("#region, #bits and #detector are only valid with #scale")

    region = None
    if header.region is not None:
        try:
            region = Region(offset=header.region[0], length=header.region[1])
        except ValidationError as e:
            raise SignalFileError(f"invalid #region: {e.errors()[0]['msg']}")
        if region.end > len(samples):
            raise SignalFileError(
                f"file ends after {len(samples)} samples but #region needs {region.end}",
                last_line,
            )
        if header.bits is not None and header.bits != region.pair_count:
            raise SignalFileError(
                f"#bits {header.bits} does not match #region capacity {region.pair_count}"
            )
    elif header.bits is not None or header.detector is not None:
        raise SignalFileError("#bits and #detector require a #region header")

    detector = None
    if header.detector is not None:
        try:
            detector = BlinkDetectorConfig(
                threshold_sigmas=header.detector[0], refractory=header.detector[1]
            )
        except ValidationError as e:
            raise SignalFileError(f"invalid #detector: {e.errors()[0]['msg']}")

    logger.debug(f"Parsed {len(samples)} {'quantized' if quantized else 'plain'} samples")
    if quantized:
        return SignalFile(
            int_signal=IntSignal(samples=tuple(samples), scale=header.scale, sample_rate=sample_rate),
            region=region,
            bit_count=region.pair_count if region else None,
            detector=detector,
        )
    return SignalFile(signal=Signal(samples=tuple(samples), sample_rate=sample_rate))


def read_signal_file(path: Path | str, rate: float | None = None) -> SignalFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SignalFileError(f"cannot read {path}: {e.strerror or e}")
    return parse_signal_text(text, rate=rate)


def format_signal_file(signal_file: SignalFile) -> str:
    """Render a SignalFile as text. Output is deterministic for equal inputs."""
    lines = [MAGIC]
    if signal_file.int_signal is not None:
        s = signal_file.int_signal
        lines.append(f"#rate {s.sample_rate!r}")
        lines.append(f"#scale {s.scale}")
        if signal_file.region is not None:
            r = signal_file.region
            lines.append(f"#region {r.offset} {r.length}")
            lines.append(f"#bits {r.pair_count}")
            if signal_file.detector is not None:
                d = signal_file.detector
                lines.append(f"#detector {d.threshold_sigmas!r} {d.refractory!r}")
        lines.extend(str(x) for x in s.samples)
    else:
        assert signal_file.signal is not None
        lines.append(f"#rate {signal_file.signal.sample_rate!r}")
        lines.extend(repr(x) for x in signal_file.signal.samples)
    return "\n".join(lines) + "\n"


def write_signal_file(path: Path | str, signal_file: SignalFile) -> None:
    Path(path).write_text(format_signal_file(signal_file), encoding="utf-8")
