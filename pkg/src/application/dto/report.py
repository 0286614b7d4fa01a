"""Report Data Transfer Object."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass
class ReportEntry:
    """One fact of a report.

    ``text`` is the human-readable line; ``fields`` is the same fact as
    ``key=value`` pairs for machine mode.
    """

    text: str
    fields: Dict[str, str] = field(default_factory=dict)


@dataclass
class Report:
    """Result of running one command.

    Used to carry results from the application services to the CLI
    formatter without exposing domain objects.
    """

    title: str
    entries: List[ReportEntry] = field(default_factory=list)
    exit_code: int = 0

    def add(self, text: str, fields: Optional[Dict[str, str]] = None) -> "Report":
        self.entries.append(ReportEntry(text, dict(fields or {})))
        return self

    def extend(self, other: "Report") -> "Report":
        self.entries.extend(other.entries)
        self.exit_code = max(self.exit_code, other.exit_code)
        return self

    def value_of(self, key: str) -> Optional[str]:
        """First value recorded under ``key``, if any."""
        for entry in self.entries:
            if key in entry.fields:
                return entry.fields[key]
        return None
