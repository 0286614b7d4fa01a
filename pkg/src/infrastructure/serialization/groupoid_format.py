"""Text files for finite discrete groupoids.

    groupoid size=<n>
    labels <n labels>
    units <unit indices>
    source <n indices>
    range <n indices>
    inverse <n indices>
    compose
    <n lines of n indices, '-' where undefined>
"""

import logging
import re
from typing import List

from ...domain.entities.groupoid import UNDEFINED, FiniteGroupoid
from ...domain.exceptions.algebra_exceptions import AxiomViolationError, TableFormatError
from ...domain.services.groupoids import validate_groupoid
from .algebra_format import content_lines, next_line, read_row, read_table

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"groupoid size=(\d+)\Z")


def _keyed_line(lines, keyword: str, last: int):
    line_number, line = next_line(lines, f"'{keyword}'", last)
    head, _, rest = line.partition(" ")
    if head != keyword:
        raise TableFormatError(line_number, f"expected '{keyword}', got '{head}'")
    return line_number, rest


def read_groupoid(text: str) -> FiniteGroupoid:
    """Parse a groupoid file and check the groupoid axioms.

    Raises:
        TableFormatError: On a malformed line.
        AxiomViolationError: If the tables do not form a groupoid.
    """
    lines = content_lines(text)
    line_number, line = next_line(lines, "a 'groupoid' header", 0)
    header = _HEADER.match(line)
    if not header:
        raise TableFormatError(line_number, "expected 'groupoid size=<n>'")
    n = int(header.group(1))
    line_number, rest = _keyed_line(lines, "labels", line_number)
    labels = rest.split()
    if len(labels) != n:
        raise TableFormatError(line_number, f"expected {n} labels, got {len(labels)}")
    line_number, rest = _keyed_line(lines, "units", line_number)
    units = read_row(line_number, rest, len(rest.split()))
    maps: List[List[int]] = []
    for keyword in ("source", "range", "inverse"):
        line_number, rest = _keyed_line(lines, keyword, line_number)
        maps.append(read_row(line_number, rest, n))
    compose, line_number = read_table(lines, "compose", n, line_number, blank="-")
    extra = next(lines, None)
    if extra is not None:
        raise TableFormatError(extra[0], f"unexpected line '{extra[1]}'")
    g = FiniteGroupoid(labels, maps[0], maps[1], maps[2], compose, units)
    report = validate_groupoid(g)
    if not report.ok:
        logger.warning(f"rejecting groupoid: {report.violation}")
        raise AxiomViolationError("groupoid axioms", report.violation or "")
    return g


def write_groupoid(g: FiniteGroupoid) -> str:
    def row(values) -> str:
        return " ".join("-" if v == UNDEFINED else str(v) for v in values)

    lines = [
        f"groupoid size={g.size}",
        "labels " + " ".join(g.labels),
        "units " + row(g.units),
        "source " + row(g.source),
        "range " + row(g.range),
        "inverse " + row(g.inverse),
        "compose",
    ]
    lines += [row(r) for r in g.compose_table]
    return "\n".join(lines) + "\n"
