# tests/unit/test_cli.py
import json

from typer.testing import CliRunner


def _quantized_file(path, samples, scale=1, rate=250.0):
    lines = ["#WMEOG 1", f"#rate {rate!r}", f"#scale {scale}"] + [str(x) for x in samples]
    path.write_text("\n".join(lines) + "\n")
    return path


def test_cli_version():
    """Test CLI version flag."""
    from eogmark.cli.main import app

    runner = CliRunner()
    result = runner.invoke(app, ["--version"])

    assert result.exit_code == 0
    assert "eogmark version 0.1.0" in result.output


def test_cli_version_command():
    """Test CLI version command."""
    from eogmark.cli.main import app

    runner = CliRunner()
    result = runner.invoke(app, ["version"])

    assert result.exit_code == 0
    assert "0.1.0" in result.output


def test_cli_help():
    """Test CLI help command."""
    from eogmark.cli.main import app

    runner = CliRunner()
    result = runner.invoke(app, ["--help"])

    assert result.exit_code == 0
    assert "Commands" in result.output
    for command in ("features", "embed", "extract", "verify", "metrics"):
        assert command in result.output


class TestFeaturesCommand:
    """Tests for `eogmark features`."""

    def test_blinky_signal(self, blinky_signal_file, tmp_path):
        """Five blinks two seconds apart give exact interval statistics."""
        from eogmark.cli.main import app

        out = tmp_path / "features.json"
        result = CliRunner().invoke(app, ["features", str(blinky_signal_file), "--out", str(out)])

        assert result.exit_code == 0
        data = json.loads(out.read_text())
        assert data["sample_count"] == 2500
        assert data["blink_times"] == [1.0, 3.0, 5.0, 7.0, 9.0]
        assert data["blink_count"] == 5
        assert data["mean_interval"] == 2.0
        assert data["mean_frequency"] == 0.5
        assert data["detector"] == {"k": 2.0, "refractory": 0.2}
        assert data["auc"] == data["mav"] * 2500

    def test_flat_signal_exits_2_after_reporting(self, tmp_path):
        """A constant signal has zero variance and no blinks."""
        from eogmark.cli.main import app

        src = tmp_path / "flat.txt"
        src.write_text("#WMEOG 1\n#rate 250.0\n" + "0.25\n" * 500)
        out = tmp_path / "features.json"
        result = CliRunner().invoke(app, ["features", str(src), "--out", str(out)])

        assert result.exit_code == 2
        data = json.loads(out.read_text())
        assert data["variance"] == 0
        assert data["std_dev"] == 0
        assert data["blink_times"] == []
        assert data["mean_frequency"] is None
        assert "blink" in result.output

    def test_malformed_line_is_reported(self, tmp_path):
        """A non-numeric sample fails with its line number."""
        from eogmark.cli.main import app

        src = tmp_path / "bad.txt"
        src.write_text("#WMEOG 1\n#rate 250\n1.0\nabc\n")
        result = CliRunner().invoke(app, ["features", str(src)])

        assert result.exit_code == 2
        assert "line 4" in result.output

    def test_rate_option_for_headerless_file(self, tmp_path):
        """Bare sample files need --rate."""
        from eogmark.cli.main import app

        src = tmp_path / "bare.txt"
        src.write_text("0.0\n1.0\n0.0\n")
        out = tmp_path / "features.json"

        assert CliRunner().invoke(app, ["features", str(src)]).exit_code == 2
        result = CliRunner().invoke(
            app, ["features", str(src), "--rate", "2", "--out", str(out)]
        )

        assert result.exit_code == 2  # fewer than two blinks
        data = json.loads(out.read_text())
        assert data["sample_rate"] == 2.0
        assert data["peak_time"] == 0.5


class TestEmbedCommand:
    """Tests for `eogmark embed`."""

    def test_odd_length_rejected(self, blinky_signal_file):
        from eogmark.cli.main import app

        result = CliRunner().invoke(app, ["embed", str(blinky_signal_file), "--length", "127"])

        assert result.exit_code == 2
        assert "odd" in result.output

    def test_zero_bits_on_zero_region_leave_signal_unchanged(self, tmp_path):
        from eogmark.cli.main import app
        from eogmark.io import read_signal_file

        samples = [0] * 128 + [5, -3, 9, 0]
        src = _quantized_file(tmp_path / "zeros.txt", samples, scale=1000)
        out = tmp_path / "marked.txt"
        result = CliRunner().invoke(
            app, ["embed", str(src), "--bits", "0" * 64, "--out", str(out)]
        )

        assert result.exit_code == 0
        marked = read_signal_file(out)
        assert marked.int_signal.samples == tuple(samples)
        assert marked.int_signal.scale == 1000
        assert marked.region.offset == 0 and marked.region.length == 128

    def test_capacity_mismatch_exits_3(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [1] * 200)
        result = CliRunner().invoke(app, ["embed", str(src), "--bits", "1010"])

        assert result.exit_code == 3
        assert "64" in result.output

    def test_overflow_exits_3(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [2147483647, -2147483648, 0, 0])
        out = tmp_path / "marked.txt"
        result = CliRunner().invoke(
            app, ["embed", str(src), "--length", "4", "--bits", "11", "--out", str(out)]
        )

        assert result.exit_code == 3
        assert not out.exists()

    def test_invalid_bit_text_exits_2(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [1] * 4)
        result = CliRunner().invoke(app, ["embed", str(src), "--length", "4", "--bits", "12"])

        assert result.exit_code == 2
        assert "invalid bit character" in result.output

    def test_no_blinks_for_self_payload_exits_2(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [7] * 300)
        result = CliRunner().invoke(app, ["embed", str(src)])

        assert result.exit_code == 2

    def test_region_past_end_exits_2(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [1] * 100)
        result = CliRunner().invoke(app, ["embed", str(src), "--bits", "0" * 64])

        assert result.exit_code == 2

    def test_scale_conflicting_with_quantized_file_exits_2(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [3] * 128, scale=1000)
        out = tmp_path / "marked.txt"
        runner = CliRunner()

        result = runner.invoke(app, ["embed", str(src), "--scale", "10", "--bits", "0" * 64])
        assert result.exit_code == 2
        assert "conflicts" in result.output

        result = runner.invoke(
            app, ["embed", str(src), "--scale", "1000", "--bits", "0" * 64, "--out", str(out)]
        )
        assert result.exit_code == 0

    def test_internal_errors_are_not_reported_as_input_errors(
        self, blinky_signal_file, monkeypatch
    ):
        import eogmark.cli.main as cli_main

        def broken(*args, **kwargs):
            raise ValueError("internal failure")

        monkeypatch.setattr(cli_main, "embed_signal", broken)
        result = CliRunner().invoke(cli_main.app, ["embed", str(blinky_signal_file)])

        assert result.exit_code != 2
        assert isinstance(result.exception, ValueError)


class TestExtractCommand:
    """Tests for `eogmark extract`."""

    def test_plain_file_is_rejected(self, blinky_signal_file):
        from eogmark.cli.main import app

        result = CliRunner().invoke(app, ["extract", str(blinky_signal_file)])

        assert result.exit_code != 0
        assert "#region" in result.output

    def test_short_watermark_prints_bits_only(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [10, 4, -3, 8])
        marked = tmp_path / "marked.txt"
        restored = tmp_path / "restored.txt"
        runner = CliRunner()
        runner.invoke(
            app, ["embed", str(src), "--length", "4", "--bits", "10", "--out", str(marked)]
        )
        result = runner.invoke(app, ["extract", str(marked), "--out", str(restored)])

        assert result.exit_code == 0
        assert result.stdout == "10\n"
        assert restored.read_text() == src.read_text()


class TestVerifyCommand:
    """Tests for `eogmark verify`."""

    def test_non_64_bit_watermark_exits_2(self, tmp_path):
        from eogmark.cli.main import app

        src = _quantized_file(tmp_path / "sig.txt", [10, 4, -3, 8])
        marked = tmp_path / "marked.txt"
        runner = CliRunner()
        runner.invoke(
            app, ["embed", str(src), "--length", "4", "--bits", "10", "--out", str(marked)]
        )
        result = runner.invoke(app, ["verify", str(marked)])

        assert result.exit_code == 2
