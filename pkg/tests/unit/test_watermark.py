# tests/unit/test_watermark.py
"""Tests for the binary32 watermark codec."""

import math
import random
import struct

import pytest

FREQUENCY_WORD = "00111110 11001000 00111110 01000010"
INTERVAL_WORD = "00111110 10111110 11111001 11011011"
GENERATED_WATERMARK = (
    "[00111110 11001000 00111110 01000010 00111110 10111110 11111001 11011011]"
)


def _f32(x: float) -> float:
    return struct.unpack(">f", struct.pack(">f", x))[0]


class TestEncodeDecode:
    """Tests for encode_f32 / decode_f32."""

    def test_blink_statistics_golden_words(self):
        from eogmark.models.watermark import BitString
        from eogmark.watermark import encode_f32

        assert encode_f32(0.3911) == BitString.from_text(FREQUENCY_WORD)
        assert encode_f32(0.3730) == BitString.from_text(INTERVAL_WORD)

    def test_zero_and_sign(self):
        from eogmark.watermark import encode_f32

        assert encode_f32(0.0).to_text() == "0" * 32
        assert encode_f32(-0.0).to_text() == "1" + "0" * 31
        assert encode_f32(-2.0).to_text() == "11000000000000000000000000000000"

    @pytest.mark.parametrize("value", [math.nan, math.inf, -math.inf, 1e39])
    def test_not_finite(self, value):
        from eogmark.core.exceptions import NotFinite
        from eogmark.watermark import encode_f32

        with pytest.raises(NotFinite):
            encode_f32(value)

    def test_decode_golden_words(self):
        from eogmark.models.watermark import BitString
        from eogmark.watermark import decode_f32

        assert decode_f32(BitString.from_text(FREQUENCY_WORD)) == _f32(0.3911)
        assert decode_f32(BitString.from_text(INTERVAL_WORD)) == _f32(0.3730)
        assert decode_f32(BitString(bits=(0,) * 32)) == 0.0

    def test_decode_wrong_length(self):
        from eogmark.core.exceptions import WrongLength
        from eogmark.models.watermark import BitString
        from eogmark.watermark import decode_f32

        with pytest.raises(WrongLength):
            decode_f32(BitString(bits=(0,) * 31))

    def test_decode_nan_is_returned_and_logged(self, caplog):
        from eogmark.models.watermark import BitString
        from eogmark.watermark import decode_f32

        nan_word = BitString.from_text("0" + "1" * 8 + "1" + "0" * 22)

        assert math.isnan(decode_f32(nan_word))
        assert "NaN" in caplog.text

    def test_encode_inverts_decode_on_random_words(self):
        from eogmark.models.watermark import BitString
        from eogmark.watermark import decode_f32, encode_f32

        rng = random.Random(754)
        checked = 0
        while checked < 1000:
            word = rng.getrandbits(32)
            if (word >> 23) & 0xFF == 0xFF:
                continue  # inf / NaN
            bits = BitString.from_text(f"{word:032b}")
            assert encode_f32(decode_f32(bits)) == bits
            checked += 1

    def test_decode_of_encode_is_binary32_rounding(self):
        from eogmark.watermark import decode_f32, encode_f32

        rng = random.Random(32)
        for _ in range(1000):
            x = rng.uniform(-1e6, 1e6) * 10 ** rng.randint(-30, 30)
            assert decode_f32(encode_f32(x)) == _f32(x)


class TestPackUnpack:
    """Tests for pack / unpack / verify."""

    def test_generated_watermark(self):
        from eogmark.models.watermark import BitString, WatermarkPayload
        from eogmark.watermark import pack

        payload = WatermarkPayload(mean_blink_frequency=0.3911, mean_blink_interval=0.3730)

        assert pack(payload) == BitString.from_text(GENERATED_WATERMARK)
        assert len(pack(payload)) == 64

    def test_unpack_generated_watermark(self):
        from eogmark.models.watermark import BitString
        from eogmark.watermark import unpack

        payload = unpack(BitString.from_text(GENERATED_WATERMARK))

        assert payload.mean_blink_frequency == _f32(0.3911)
        assert payload.mean_blink_interval == _f32(0.3730)

    def test_zero_payload(self):
        from eogmark.models.watermark import BitString, WatermarkPayload
        from eogmark.watermark import pack, unpack

        zero = WatermarkPayload(mean_blink_frequency=0.0, mean_blink_interval=0.0)

        assert pack(zero).to_text() == "0" * 64
        assert unpack(BitString(bits=(0,) * 64)) == zero

    def test_unpack_wrong_length(self):
        from eogmark.core.exceptions import WrongLength
        from eogmark.models.watermark import BitString
        from eogmark.watermark import unpack

        with pytest.raises(WrongLength):
            unpack(BitString(bits=(1,) * 63))

    def test_pack_rejects_nan(self):
        from eogmark.core.exceptions import NotFinite
        from eogmark.models.watermark import WatermarkPayload
        from eogmark.watermark import pack

        with pytest.raises(NotFinite):
            pack(WatermarkPayload(mean_blink_frequency=math.nan, mean_blink_interval=1.0))

    def test_round_trips(self):
        from eogmark.models.watermark import BitString, WatermarkPayload
        from eogmark.watermark import pack, unpack

        rng = random.Random(64)
        for _ in range(500):
            payload = WatermarkPayload(
                mean_blink_frequency=rng.uniform(0.0, 5.0),
                mean_blink_interval=rng.uniform(0.0, 20.0),
            )
            assert unpack(pack(payload)) == payload

            word = rng.getrandbits(64)
            if any((word >> shift) & 0x7F800000 == 0x7F800000 for shift in (0, 32)):
                continue
            bits = BitString.from_text(f"{word:064b}")
            assert pack(unpack(bits)) == bits

    def test_verify(self):
        from eogmark.models.watermark import WatermarkPayload
        from eogmark.watermark import verify

        p = WatermarkPayload(mean_blink_frequency=0.3911, mean_blink_interval=0.3730)
        q = WatermarkPayload(mean_blink_frequency=0.3911, mean_blink_interval=0.3731)
        nan = WatermarkPayload(mean_blink_frequency=math.nan, mean_blink_interval=0.3730)

        assert verify(p, p) is True
        assert verify(p, q) is False
        assert verify(p, nan) is False
