"""Data Transfer Objects."""

from .report import Report, ReportEntry

__all__ = ["Report", "ReportEntry"]
