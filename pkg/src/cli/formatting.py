"""Rendering of reports as text or machine-readable lines."""

from typing import Literal

from ..application.dto.report import Report

OutputFormat = Literal["text", "machine"]


def format_report(report: Report, mode: OutputFormat = "text") -> str:
    """Render a report.

    Text mode prints the title followed by one line per entry. Machine
    mode prints one ``key=value ...`` line per entry that carries fields,
    keys in insertion order, and nothing else.

    Args:
        report: The report to render.
        mode: ``text`` or ``machine``.

    Returns:
        str: The rendered report, newline-terminated.
    """
    if mode == "machine":
        lines = [
            " ".join(f"{key}={value}" for key, value in entry.fields.items())
            for entry in report.entries
            if entry.fields
        ]
    else:
        lines = [f"# {report.title}"] + [entry.text for entry in report.entries]
    return "\n".join(lines) + "\n"
