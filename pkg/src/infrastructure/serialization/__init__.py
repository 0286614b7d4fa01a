"""Text formats for graphs, finite algebras, groupoids and element expressions."""

from .algebra_format import load_algebra, read_algebra, write_algebra
from .expression_parser import parse_element_expr, parse_path
from .graph_format import load_graph, parse_graph, write_graph
from .groupoid_format import read_groupoid, write_groupoid
from .laurent_format import parse_laurent

__all__ = [
    "load_algebra",
    "load_graph",
    "parse_element_expr",
    "parse_graph",
    "parse_laurent",
    "parse_path",
    "read_algebra",
    "read_groupoid",
    "write_algebra",
    "write_graph",
    "write_groupoid",
]
