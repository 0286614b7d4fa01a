"""Operation-table files for finite algebras.

    algebra <name> size=<n>
    add
    <n lines of n indices>
    mul
    <n lines of n indices>
    zero=<i>
    one=<i>          (optional)
"""

import logging
import re
from pathlib import Path as FilePath
from typing import Iterator, List, Optional, Tuple, Union

from ...domain.entities.finite_algebra import FiniteAlgebra
from ...domain.exceptions.algebra_exceptions import AxiomViolationError, TableFormatError
from ...domain.services.finite_algebras import validate_algebra

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"algebra (\S+) size=(\d+)\Z")
_INDEX = re.compile(r"(zero|one)=(\d+)\Z")

Lines = Iterator[Tuple[int, str]]


def content_lines(text: str) -> Lines:
    """Numbered non-blank lines, stripped."""
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield line_number, line


def next_line(lines: Lines, expected: str, last: int) -> Tuple[int, str]:
    try:
        return next(lines)
    except StopIteration:
        raise TableFormatError(last + 1, f"unexpected end of input, expected {expected}")


def read_row(line_number: int, line: str, size: int, blank: Optional[str] = None) -> List[int]:
    """One table row of ``size`` indices; ``blank`` tokens become -1."""
    tokens = line.split()
    if len(tokens) != size:
        raise TableFormatError(line_number, f"expected {size} entries, got {len(tokens)}")
    row = []
    for token in tokens:
        if blank is not None and token == blank:
            row.append(-1)
        elif token.isdigit():
            row.append(int(token))
        else:
            raise TableFormatError(line_number, f"invalid entry '{token}'")
    return row


def read_table(
    lines: Lines, keyword: str, size: int, last: int, blank: Optional[str] = None
) -> Tuple[List[List[int]], int]:
    line_number, line = next_line(lines, f"'{keyword}'", last)
    if line != keyword:
        raise TableFormatError(line_number, f"expected '{keyword}', got '{line}'")
    rows = []
    for _ in range(size):
        line_number, line = next_line(lines, f"a row of '{keyword}'", line_number)
        rows.append(read_row(line_number, line, size, blank))
    return rows, line_number


def read_algebra(text: str) -> FiniteAlgebra:
    """Parse an algebra file and check the hemiring axioms.

    Raises:
        TableFormatError: On a malformed line.
        IndexOutOfRangeError: If an entry leaves the carrier.
        AxiomViolationError: If the tables are not a hemiring.
    """
    lines = content_lines(text)
    line_number, line = next_line(lines, "an 'algebra' header", 0)
    header = _HEADER.match(line)
    if not header:
        raise TableFormatError(line_number, "expected 'algebra <name> size=<n>'")
    name, size = header.group(1), int(header.group(2))
    add, line_number = read_table(lines, "add", size, line_number)
    mul, line_number = read_table(lines, "mul", size, line_number)
    indices = {}
    for line_number, line in lines:
        match = _INDEX.match(line)
        if not match or match.group(1) in indices:
            raise TableFormatError(line_number, f"unexpected line '{line}'")
        indices[match.group(1)] = int(match.group(2))
    if "zero" not in indices:
        raise TableFormatError(line_number + 1, "missing 'zero=<i>'")
    labels = [str(i) for i in range(size)]
    alg = FiniteAlgebra(name, labels, add, mul, indices["zero"], indices.get("one"))
    report = validate_algebra(alg)
    if not report.ok:
        logger.warning(f"rejecting algebra {name}: {report.violation}")
        raise AxiomViolationError("hemiring axioms", report.violation or "")
    return alg


def write_algebra(alg: FiniteAlgebra) -> str:
    lines = [f"algebra {alg.name} size={alg.size}", "add"]
    lines += [" ".join(str(x) for x in row) for row in alg.add_rows]
    lines.append("mul")
    lines += [" ".join(str(x) for x in row) for row in alg.mul_rows]
    lines.append(f"zero={alg.zero}")
    if alg.one is not None:
        lines.append(f"one={alg.one}")
    return "\n".join(lines) + "\n"


def load_algebra(path: Union[str, FilePath]) -> FiniteAlgebra:
    return read_algebra(FilePath(path).read_text(encoding="utf-8"))
