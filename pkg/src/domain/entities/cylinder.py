"""Cylinder sets Z(α, β, F) and elements of the Steinberg algebra A_B(G_E).

An element is a compact open subset of the graph groupoid. Internally it
is stored per reduced root (α₀, β₀), i.e. the last edges of α₀ and β₀
differ or one of them has length 0, as a prefix tree over the boundary
paths x starting at r(α₀): the element contains (α₀εx, ·, β₀εx) exactly
for the x selected by the tree below ε.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Tuple, Union

from ..value_objects.paths import EdgeRef, Path
from .graph import Graph


@dataclass(frozen=True)
class Cylinder:
    """The basic compact open bisection Z(α, β, F) = Z(α, β) minus ⋃_{e∈F} Z(αe, βe)."""

    alpha: Path
    beta: Path
    excluded: FrozenSet[EdgeRef] = frozenset()

    @property
    def degree(self) -> int:
        return len(self.alpha) - len(self.beta)

    @property
    def vertex(self) -> str:
        return self.alpha.end

    def inverse(self) -> "Cylinder":
        return Cylinder(self.beta, self.alpha, self.excluded)

    def sort_key(self) -> Tuple:
        return (
            len(self.alpha),
            self.alpha.sort_key(),
            self.beta.sort_key(),
            tuple(sorted(e.sort_key() for e in self.excluded)),
        )

    def __str__(self) -> str:
        text = f"Z({self.alpha}; {self.beta}"
        if self.excluded:
            text += "; " + ",".join(f"~{e}" for e in sorted(self.excluded, key=EdgeRef.sort_key))
        return text + ")"


@dataclass(frozen=True)
class Leaf:
    """A subtree that is either everything below its node or nothing."""

    full: bool


@dataclass(frozen=True)
class Node:
    """A partial subtree at vertex w.

    At a regular vertex ``point`` is False and unlisted children are empty.
    At an infinite emitter ``point`` says whether the finite boundary path
    ending at w is selected, and unlisted children default to that value.
    """

    point: bool
    children: Tuple[Tuple[EdgeRef, "Shape"], ...]

    def child(self, ref: EdgeRef, default: "Shape") -> "Shape":
        for key, shape in self.children:
            if key == ref:
                return shape
        return default


Shape = Union[Leaf, Node]
FULL = Leaf(True)
EMPTY = Leaf(False)
Root = Tuple[Path, Path]


def emit_cylinders(graph: Graph, root: Root, shape: Shape) -> List[Cylinder]:
    """Read the canonical cylinders off a root's tree."""
    alpha0, beta0 = root
    out: List[Cylinder] = []
    stack: List[Tuple[Path, Path, Shape]] = [(alpha0, beta0, shape)]
    while stack:
        alpha, beta, current = stack.pop()
        if isinstance(current, Leaf):
            if current.full:
                out.append(Cylinder(alpha, beta))
            continue
        if current.point:
            out.append(Cylinder(alpha, beta, frozenset(ref for ref, _ in current.children)))
        for ref, child in current.children:
            if child != EMPTY:
                end = graph.range_of(ref)
                stack.append((alpha.extend((ref,), end), beta.extend((ref,), end), child))
    return out


class SteinbergElt:
    """An element of A_B(G_E): a compact open set in canonical form.

    Build elements through the cylinder-calculus service; two elements
    denote the same set iff their canonical cylinder tuples are equal.
    """

    def __init__(self, graph: Graph, shapes: Mapping[Root, Shape]):
        self._graph = graph
        self._shapes: Dict[Root, Shape] = {root: s for root, s in shapes.items() if s != EMPTY}
        cylinders: List[Cylinder] = []
        for root, shape in self._shapes.items():
            cylinders.extend(emit_cylinders(graph, root, shape))
        self._cylinders: Tuple[Cylinder, ...] = tuple(sorted(cylinders, key=Cylinder.sort_key))

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def shapes(self) -> Dict[Root, Shape]:
        return self._shapes

    @property
    def cylinders(self) -> Tuple[Cylinder, ...]:
        return self._cylinders

    @property
    def is_zero(self) -> bool:
        return not self._cylinders

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SteinbergElt)
            and self._cylinders == other._cylinders
            and self._graph == other._graph
        )

    def __hash__(self) -> int:
        return hash(self._cylinders)

    def __str__(self) -> str:
        if not self._cylinders:
            return "0"
        return " + ".join(str(c) for c in self._cylinders)

    def __repr__(self) -> str:
        return f"SteinbergElt({self})"
