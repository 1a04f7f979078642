"""Signal file input and output."""

from eogmark.io.signal_file import (
    MAGIC,
    SignalFile,
    SignalKind,
    format_signal_file,
    parse_signal_text,
    read_signal_file,
    write_signal_file,
)

__all__ = [
    "MAGIC",
    "SignalFile",
    "SignalKind",
    "format_signal_file",
    "parse_signal_text",
    "read_signal_file",
    "write_signal_file",
]
