"""Exception hierarchy for eogmark.

Library code raises these; the CLI maps them onto exit codes.
"""


class EogmarkError(Exception):
    """Base class for all eogmark errors."""


# Signal model


class SignalError(EogmarkError):
    """Invalid operation on a signal or region."""


class RangeOverflow(SignalError):
    """A quantized sample does not fit the signed 32-bit range."""

    def __init__(self, index: int, value: int, scale: int):
        self.index = index
        self.value = value
        self.scale = scale
        super().__init__(
            f"Sample {index} quantizes to {value}, outside the 32-bit range at scale {scale}; "
            "use a smaller scale"
        )


class RegionOutOfBounds(SignalError):
    """Region does not lie within the signal."""

    def __init__(self, offset: int, length: int, signal_length: int):
        self.offset = offset
        self.length = length
        self.signal_length = signal_length
        super().__init__(
            f"Region [{offset}, {offset + length}) exceeds signal length {signal_length}"
        )


class LengthMismatch(SignalError):
    """Two inputs that must have equal length do not."""

    def __init__(self, expected: int, actual: int, what: str = "length"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")


# Codec


class CodecError(EogmarkError):
    """Embedding could not be performed."""


class CapacityMismatch(CodecError):
    """Bit count does not equal the number of pairs in the region."""

    def __init__(self, capacity: int, bit_count: int):
        self.capacity = capacity
        self.bit_count = bit_count
        super().__init__(f"Region carries exactly {capacity} bits, got {bit_count}")


class ExpansionOverflow(CodecError):
    """One or more pairs cannot be expanded without leaving the sample range."""

    def __init__(self, pair_indices: list[int], detail: str | None = None):
        self.pair_indices = list(pair_indices)
        if detail is not None:
            super().__init__(detail)
            return
        shown = ", ".join(str(i) for i in self.pair_indices[:16])
        if len(self.pair_indices) > 16:
            shown += ", ..."
        super().__init__(f"{len(self.pair_indices)} pair(s) not expandable: {shown}")


# Features


class FeatureError(EogmarkError):
    """A feature is undefined for the given input."""


class InsufficientBlinks(FeatureError):
    """Blink statistics need at least two blinks."""

    def __init__(self, blink_count: int):
        self.blink_count = blink_count
        super().__init__(f"Blink statistics need at least 2 blinks, found {blink_count}")


# Watermark


class WatermarkError(EogmarkError):
    """Watermark bits or payload are malformed."""


class NotFinite(WatermarkError):
    """Value has no finite binary32 representation."""


class WrongLength(WatermarkError):
    """Bit string has the wrong length for the requested decoding."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected {expected} bits, got {actual}")


# Metrics


class MetricsError(EogmarkError):
    """A quality metric is undefined for the given input."""


class ZeroSignal(MetricsError):
    """Original signal has zero power."""


class EmptyBits(MetricsError):
    """Bit error rate of empty bit strings is undefined."""


# Files


class SignalFileError(EogmarkError):
    """Signal file could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
