# eogmark/cli/main.py
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from eogmark import __version__
from eogmark.cli.render import render_json
from eogmark.core.config import get_settings
from eogmark.core.exceptions import CodecError, EogmarkError, SignalError, WatermarkError
from eogmark.core.pipeline import (
    embed_signal,
    extract_signal,
    generate_payload,
    verify_signal,
)
from eogmark.features import compute_features
from eogmark.io import SignalFile, format_signal_file, read_signal_file
from eogmark.metrics import metrics_report
from eogmark.models.features import BlinkDetectorConfig, FeatureReport
from eogmark.models.signal import Region
from eogmark.models.watermark import BitString
from eogmark.watermark import WATERMARK_BITS, pack, unpack

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CODEC = 3

app = typer.Typer(
    name="eogmark",
    help="Reversible blink-statistic watermarking for EOG signals",
)
console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)


def version_callback(value: bool):
    if value:
        console.print(f"eogmark version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="Logging level (default from EOGMARK_LOG_LEVEL)"
    ),
):
    """eogmark - reversible blink-statistic watermarking for EOG signals."""
    logging.basicConfig(
        level=(log_level or get_settings().log_level).upper(),
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _fail(message: str, code: int) -> None:
    err_console.print(f"Error: {message}", style="red", markup=False, highlight=False)
    raise typer.Exit(code)


@contextmanager
def _handle_errors() -> Iterator[None]:
    """Map library failures onto exit codes."""
    try:
        yield
    except CodecError as e:
        _fail(str(e), EXIT_CODEC)
    except (EogmarkError, ValidationError) as e:
        _fail(str(e), EXIT_INPUT)


def _parse_bits(text: str) -> BitString:
    try:
        return BitString.from_text(text)
    except ValueError as e:
        raise WatermarkError(str(e)) from e


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")


def _detector(k: Optional[float], refractory: Optional[float]) -> BlinkDetectorConfig:
    defaults = BlinkDetectorConfig.from_settings()
    return BlinkDetectorConfig(
        threshold_sigmas=defaults.threshold_sigmas if k is None else k,
        refractory=defaults.refractory if refractory is None else refractory,
    )


def _feature_json(report: FeatureReport, sample_count: int) -> dict[str, Any]:
    f = report.features
    b = report.blinks
    return {
        "sample_rate": f.sample_rate,
        "sample_count": sample_count,
        "mean": f.mean,
        "mav": f.mav,
        "std_dev": f.std_dev,
        "variance": f.variance,
        "auc": f.auc,
        "peak_value": f.peak_value,
        "peak_index": f.peak_index,
        "peak_time": f.peak_time,
        "valley_value": f.valley_value,
        "valley_index": f.valley_index,
        "valley_time": f.valley_time,
        "detector": {
            "k": report.detector.threshold_sigmas,
            "refractory": report.detector.refractory,
        },
        "blink_times": list(report.blink_times),
        "blink_count": len(report.blink_times),
        "intervals": list(b.intervals) if b else None,
        "mean_frequency": b.mean_frequency if b else None,
        "frequency_std": b.frequency_std if b else None,
        "blinks_per_interval": b.blinks_per_interval if b else None,
        "mean_interval": b.mean_interval if b else None,
        "frequency_outliers": report.frequency_outliers,
    }


@app.command()
def features(
    input_path: Path = typer.Argument(..., help="Plain or quantized signal file"),
    rate: Optional[float] = typer.Option(None, "--rate", help="Sample rate in Hz"),
    k: Optional[float] = typer.Option(None, "--k", help="Blink threshold in standard deviations"),
    refractory: Optional[float] = typer.Option(
        None, "--refractory", help="Minimum seconds between blinks"
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Write JSON here instead of stdout"),
):
    """Compute time-domain features and blink statistics."""
    with _handle_errors():
        signal_file = read_signal_file(input_path, rate=rate)
        signal = signal_file.as_signal()
        report = compute_features(signal, _detector(k, refractory))

    _emit(render_json(_feature_json(report, len(signal))) + "\n", out)
    if report.blinks is None:
        _fail(
            f"only {len(report.blink_times)} blink(s) detected; blink statistics need 2",
            EXIT_INPUT,
        )


@app.command()
def embed(
    input_path: Path = typer.Argument(..., help="Plain or quantized signal file"),
    rate: Optional[float] = typer.Option(None, "--rate", help="Sample rate in Hz"),
    scale: Optional[int] = typer.Option(None, "--scale", help="Integer units per volt"),
    offset: Optional[int] = typer.Option(None, "--offset", help="First sample of the region"),
    length: Optional[int] = typer.Option(None, "--length", help="Region length (even)"),
    bits: Optional[str] = typer.Option(
        None, "--bits", help="Explicit watermark bits; default is the signal's blink payload"
    ),
    k: Optional[float] = typer.Option(None, "--k", help="Blink threshold in standard deviations"),
    refractory: Optional[float] = typer.Option(
        None, "--refractory", help="Minimum seconds between blinks"
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Output path (default stdout)"),
):
    """Embed a watermark into a region of the signal."""
    settings = get_settings()
    with _handle_errors():
        region = Region(
            offset=settings.default_offset if offset is None else offset,
            length=settings.default_length if length is None else length,
        )
        source = read_signal_file(input_path, rate=rate)
        file_scale = source.int_signal.scale if source.int_signal is not None else None
        if scale is not None and file_scale is not None and scale != file_scale:
            raise SignalError(f"--scale {scale} conflicts with the file's #scale {file_scale}")
        carrier = source.as_int_signal(settings.default_scale if scale is None else scale)
        watermark = _parse_bits(bits) if bits is not None else None
        watermarked = embed_signal(carrier, region, _detector(k, refractory), bits=watermark)

    logger.info(f"Embedded {watermarked.bit_count} bits at [{region.offset}, {region.end})")
    _emit(format_signal_file(watermarked), out)


@app.command()
def extract(
    input_path: Path = typer.Argument(..., help="Watermarked signal file"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the restored signal here"),
):
    """Extract the watermark and restore the original signal."""
    with _handle_errors():
        watermarked = read_signal_file(input_path)
        restored, watermark = extract_signal(watermarked)
        payload = unpack(watermark) if len(watermark) == WATERMARK_BITS else None

    typer.echo(watermark.to_text())
    if payload is not None:
        typer.echo(render_json(payload.model_dump()))
    if out is not None:
        out.write_text(format_signal_file(SignalFile(int_signal=restored)), encoding="utf-8")


@app.command("verify")
def verify_cmd(
    input_path: Path = typer.Argument(..., help="Watermarked signal file"),
    original: Optional[Path] = typer.Option(
        None,
        "--original",
        help="Archive copy to compare the restored signal against; without it, changes that "
        "keep every pair difference's parity go unnoticed",
    ),
    strict: bool = typer.Option(False, "--strict", help="Exit 1 on any mismatch"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write JSON here instead of stdout"),
):
    """Check the extracted watermark against parameters recomputed from the restored signal."""
    with _handle_errors():
        watermarked = read_signal_file(input_path)
        archive = None
        if original is not None and watermarked.int_signal is not None:
            archive = read_signal_file(original, rate=watermarked.int_signal.sample_rate)
            archive = archive.as_int_signal(watermarked.int_signal.scale)
        report = verify_signal(watermarked, original=archive)

    _emit(render_json(report.to_json_dict()) + "\n", out)
    if strict and (not report.payload_match or report.restored_identical is False):
        _fail("verification mismatch", EXIT_MISMATCH)


@app.command()
def metrics(
    original: Path = typer.Argument(..., help="Original signal file (plain or quantized)"),
    watermarked: Path = typer.Argument(..., help="Watermarked signal file"),
    bits: Optional[str] = typer.Option(
        None, "--bits", help="Reference watermark; default is regenerated from the original"
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Write JSON here instead of stdout"),
):
    """Report SNR, BER and maximum absolute error of an embedding."""
    with _handle_errors():
        marked = read_signal_file(watermarked)
        if marked.int_signal is None:
            raise EogmarkError(f"{watermarked} is not a quantized signal file")
        source = read_signal_file(original, rate=marked.int_signal.sample_rate)
        source_int = source.as_int_signal(marked.int_signal.scale)
        _, received = extract_signal(marked)
        if bits is not None:
            reference = _parse_bits(bits)
        else:
            cfg = marked.detector or BlinkDetectorConfig.from_settings()
            reference = pack(generate_payload(source_int, cfg))
        report = metrics_report(source_int, marked.int_signal, reference, received)

    _emit(render_json(report.to_json_dict()) + "\n", out)


@app.command("version")
def version_cmd():
    """Show version information."""
    console.print(f"[bold]eogmark[/bold] version [cyan]{__version__}[/cyan]")
