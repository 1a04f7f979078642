# tests/conftest.py
import os

import numpy as np
import pytest


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch):
    """Isolate tests from EOGMARK_* variables and the cached settings instance."""
    for key in list(os.environ):
        if key.startswith("EOGMARK_"):
            monkeypatch.delenv(key)

    import eogmark.core.config as config_module

    config_module._settings = None
    yield
    config_module._settings = None


def make_spike_train(
    spike_indices,
    length: int,
    amplitude: int = 380,
    noise: int = 0,
    seed: int = 0,
) -> list[int]:
    """Integer samples (microvolts): optional uniform noise plus isolated one-sample spikes."""
    rng = np.random.default_rng(seed)
    if noise:
        samples = rng.integers(-noise, noise + 1, size=length)
    else:
        samples = np.zeros(length, dtype=np.int64)
    for i in spike_indices:
        samples[i] = amplitude
    return [int(x) for x in samples]


@pytest.fixture
def spike_train():
    return make_spike_train


@pytest.fixture
def blinky_int_signal():
    """Ten seconds at 250 Hz with five blinks 2 s apart and low-level noise."""
    from eogmark.models.signal import IntSignal

    samples = make_spike_train([250, 750, 1250, 1750, 2250], length=2500, noise=20, seed=7)
    return IntSignal(samples=tuple(samples), scale=1_000_000, sample_rate=250.0)


@pytest.fixture
def blinky_signal_file(tmp_path, blinky_int_signal):
    """The blinky signal written as a plain (volts) signal file."""
    from eogmark.core.signal_ops import dequantize
    from eogmark.io import SignalFile, write_signal_file

    path = tmp_path / "blinky.txt"
    write_signal_file(path, SignalFile(signal=dequantize(blinky_int_signal)))
    return path
