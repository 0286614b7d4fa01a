"""Edge references and finite paths in a directed graph."""

from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class EdgeRef:
    """Reference to a single edge.

    A plain edge is referenced by its id; a member of an infinite bundle by
    the bundle id plus a natural index.
    """

    name: str
    index: Optional[int] = None

    @property
    def is_bundle_member(self) -> bool:
        return self.index is not None

    def sort_key(self) -> Tuple[str, int]:
        return (self.name, -1 if self.index is None else self.index)

    def __str__(self) -> str:
        if self.index is None:
            return self.name
        return f"{self.name}[{self.index}]"


@dataclass(frozen=True)
class Path:
    """A finite path: a start vertex, a sequence of edges and its range vertex.

    Paths are built through ``Graph.path`` which checks that consecutive edges
    compose; a path of length 0 carries only its vertex.
    """

    start: str
    edges: Tuple[EdgeRef, ...]
    end: str

    @classmethod
    def vertex(cls, v: str) -> "Path":
        return cls(v, (), v)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def is_prefix_of(self, other: "Path") -> bool:
        """Check whether ``other`` = self·ε for some path ε."""
        if self.start != other.start or len(self.edges) > len(other.edges):
            return False
        return other.edges[: len(self.edges)] == self.edges

    def suffix_after(self, prefix: "Path") -> Tuple[EdgeRef, ...]:
        """Edges of ε where self = prefix·ε (prefix must be a prefix)."""
        return self.edges[len(prefix.edges) :]

    def extend(self, edges: Tuple[EdgeRef, ...], end: str) -> "Path":
        """Append edges whose composite ends at ``end``."""
        if not edges:
            return self
        return Path(self.start, self.edges + tuple(edges), end)

    def concat(self, other: "Path") -> "Path":
        return self.extend(other.edges, other.end)

    def sort_key(self) -> Tuple:
        return (len(self.edges), self.start, tuple(e.sort_key() for e in self.edges))

    def __str__(self) -> str:
        if not self.edges:
            return self.start
        return ".".join(str(e) for e in self.edges)
