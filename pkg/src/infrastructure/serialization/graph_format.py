"""Line-oriented graph files.

    # comment
    vertex <id>
    edge <id> <src> <rng>
    bundle <id> <src> <rng>

Ids match ``[A-Za-z][A-Za-z0-9_]*``. Lines may come in any order; endpoints
are checked once the whole file has been read.
"""

import logging
import re
from pathlib import Path as FilePath
from typing import List, Union

from ...domain.entities.graph import EdgeRecord, Graph
from ...domain.exceptions.graph_exceptions import GraphSyntaxError

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

_ARITY = {"vertex": 1, "edge": 3, "bundle": 3}


def _check_identifiers(line_number: int, tokens: List[str]) -> None:
    for token in tokens:
        if not IDENTIFIER.match(token):
            raise GraphSyntaxError(line_number, f"invalid identifier '{token}'")


def parse_graph(text: str, name: str = "") -> Graph:
    """Parse a graph file.

    Args:
        text: File contents.
        name: Display name for reports.

    Returns:
        Graph: The validated graph.

    Raises:
        GraphSyntaxError: On a malformed line, with its 1-based number.
        GraphSemanticError: On duplicate ids or undeclared endpoints.
    """
    vertices: List[str] = []
    edges: List[EdgeRecord] = []
    bundles: List[EdgeRecord] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword not in _ARITY:
            raise GraphSyntaxError(line_number, f"unknown keyword '{keyword}'")
        if len(args) != _ARITY[keyword]:
            raise GraphSyntaxError(
                line_number, f"'{keyword}' takes {_ARITY[keyword]} argument(s), got {len(args)}"
            )
        _check_identifiers(line_number, args)
        if keyword == "vertex":
            vertices.append(args[0])
        elif keyword == "edge":
            edges.append(EdgeRecord(*args))
        else:
            bundles.append(EdgeRecord(*args))
    graph = Graph(vertices, edges, bundles, name=name)
    logger.debug(f"parsed {graph!r}")
    return graph


def write_graph(graph: Graph) -> str:
    """Write a graph in declaration order; parse_graph reads it back unchanged."""
    lines = [f"vertex {v}" for v in graph.vertices]
    lines += [f"edge {e.id} {e.source} {e.range}" for e in graph.edges]
    lines += [f"bundle {b.id} {b.source} {b.range}" for b in graph.bundles]
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, FilePath]) -> Graph:
    """Read a graph file; the file stem becomes the graph name."""
    file_path = FilePath(path)
    return parse_graph(file_path.read_text(encoding="utf-8"), name=file_path.stem)
