"""Directed multigraphs with optional infinite edge bundles."""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from ..exceptions.graph_exceptions import GraphSemanticError, GraphShapeError, UnknownVertexError
from ..value_objects.paths import EdgeRef, Path


@dataclass(frozen=True)
class EdgeRecord:
    """A declared edge, or a bundle standing for countably many parallel edges."""

    id: str
    source: str
    range: str


@dataclass(frozen=True)
class Cycle:
    """A closed path with pairwise distinct edge sources, based at its least vertex.

    ``parallel_family`` marks cycles that run through a bundle representative
    and therefore stand for infinitely many parallel cycles.
    """

    path: Path
    parallel_family: bool = False

    @property
    def base(self) -> str:
        return self.path.start

    def __str__(self) -> str:
        text = str(self.path)
        return f"{text} (+ parallel family)" if self.parallel_family else text


class Graph:
    """A finite directed graph E = (E⁰, E¹, s, r), possibly with bundles.

    A bundle ``b`` from ``u`` to ``w`` stands for the edges ``b[0], b[1], ...``
    all from ``u`` to ``w``; its source is an infinite emitter. Declaration
    order is kept for writing the graph back out.
    """

    def __init__(
        self,
        vertices: Sequence[str],
        edges: Sequence[EdgeRecord] = (),
        bundles: Sequence[EdgeRecord] = (),
        name: str = "",
    ):
        """Initialize and validate a graph.

        Args:
            vertices: Vertex ids.
            edges: Finite edge records.
            bundles: Bundle records.
            name: Display name used in reports.

        Raises:
            GraphSemanticError: On duplicate ids or undeclared endpoints.
        """
        seen: Dict[str, str] = {}
        for v in vertices:
            if v in seen:
                raise GraphSemanticError(v, f"duplicate vertex id {v}")
            seen[v] = "vertex"
        for record in list(edges) + list(bundles):
            if record.id in seen:
                raise GraphSemanticError(record.id, f"duplicate id {record.id}")
            seen[record.id] = "edge"
            for endpoint in (record.source, record.range):
                if seen.get(endpoint) != "vertex":
                    raise GraphSemanticError(endpoint, f"undeclared vertex {endpoint}")
        self.name = name
        self._vertices: Tuple[str, ...] = tuple(vertices)
        self._edges: Tuple[EdgeRecord, ...] = tuple(edges)
        self._bundles: Tuple[EdgeRecord, ...] = tuple(bundles)
        self._edge_by_id = {e.id: e for e in self._edges}
        self._bundle_by_id = {b.id: b for b in self._bundles}
        out_edges: Dict[str, List[EdgeRef]] = {v: [] for v in self._vertices}
        for e in self._edges:
            out_edges[e.source].append(EdgeRef(e.id))
        self._out_edges = {
            v: tuple(sorted(refs, key=EdgeRef.sort_key)) for v, refs in out_edges.items()
        }
        self._emitters = frozenset(b.source for b in self._bundles)
        self._key = (
            frozenset(self._vertices),
            frozenset(self._edges),
            frozenset(self._bundles),
        )

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def sorted_vertices(self) -> List[str]:
        return sorted(self._vertices)

    @property
    def edges(self) -> Tuple[EdgeRecord, ...]:
        return self._edges

    @property
    def bundles(self) -> Tuple[EdgeRecord, ...]:
        return self._bundles

    def has_vertex(self, v: str) -> bool:
        return v in self._out_edges

    def require_vertex(self, v: str) -> None:
        if v not in self._out_edges:
            raise UnknownVertexError(v)

    def has_edge(self, name: str) -> bool:
        return name in self._edge_by_id

    def has_bundle(self, name: str) -> bool:
        return name in self._bundle_by_id

    def record(self, ref: EdgeRef) -> EdgeRecord:
        """Look up the edge or bundle record behind a reference.

        Raises:
            GraphShapeError: If the reference names no edge of this graph.
        """
        if ref.index is None:
            record = self._edge_by_id.get(ref.name)
        else:
            record = self._bundle_by_id.get(ref.name) if ref.index >= 0 else None
        if record is None:
            raise GraphShapeError(f"no edge {ref} in graph")
        return record

    def has_ref(self, ref: EdgeRef) -> bool:
        if ref.index is None:
            return ref.name in self._edge_by_id
        return ref.index >= 0 and ref.name in self._bundle_by_id

    def source_of(self, ref: EdgeRef) -> str:
        return self.record(ref).source

    def range_of(self, ref: EdgeRef) -> str:
        return self.record(ref).range

    def out_edges(self, v: str) -> Tuple[EdgeRef, ...]:
        """Finite edges leaving ``v``, sorted by id (bundles excluded)."""
        self.require_vertex(v)
        return self._out_edges[v]

    def out_bundles(self, v: str) -> Tuple[EdgeRecord, ...]:
        self.require_vertex(v)
        return tuple(b for b in self._bundles if b.source == v)

    def is_sink(self, v: str) -> bool:
        return not self.out_edges(v) and v not in self._emitters

    def is_infinite_emitter(self, v: str) -> bool:
        self.require_vertex(v)
        return v in self._emitters

    def is_regular(self, v: str) -> bool:
        return not self.is_sink(v) and not self.is_infinite_emitter(v)

    @property
    def is_row_finite(self) -> bool:
        return not self._bundles

    def edge_path(self, ref: EdgeRef) -> Path:
        record = self.record(ref)
        return Path(record.source, (ref,), record.range)

    def path(self, start: str, refs: Iterable[EdgeRef]) -> Path:
        """Build a path from ``start`` along ``refs``.

        Raises:
            GraphShapeError: If consecutive edges do not compose.
        """
        self.require_vertex(start)
        current = start
        edges = []
        for ref in refs:
            record = self.record(ref)
            if record.source != current:
                raise GraphShapeError(f"edge {ref} does not start at {current}")
            edges.append(ref)
            current = record.range
        return Path(start, tuple(edges), current)

    def extend(self, path: Path, refs: Sequence[EdgeRef]) -> Path:
        """Extend ``path`` by ``refs``, checking composition."""
        if not refs:
            return path
        tail = self.path(path.end, refs)
        return path.extend(tail.edges, tail.end)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return (
            f"Graph(name={self.name!r}, vertices={len(self._vertices)}, "
            f"edges={len(self._edges)}, bundles={len(self._bundles)})"
        )
