"""Commands for the verbs that read a graph file."""

from dataclasses import dataclass, field
from typing import List


@dataclass
class AnalyzeCommand:
    """Command to print the structural report and simpleness verdicts of a graph."""

    graph_path: str


@dataclass
class ClosureCommand:
    """Command to compute the hereditary saturated closure of some vertices."""

    graph_path: str
    vertices: List[str] = field(default_factory=list)


@dataclass
class CyclesCommand:
    """Command to list the cycles of a graph and whether they have exits."""

    graph_path: str


@dataclass
class EvalCommand:
    """Command to substitute a cycle into a Laurent polynomial."""

    graph_path: str
    polynomial: str
    cycle: str


@dataclass
class EqCommand:
    """Command to decide equality of two element expressions."""

    graph_path: str
    left: str
    right: str


@dataclass
class ImageCommand:
    """Command to print the canonical image of an expression in A_B(G_E)."""

    graph_path: str
    expression: str
