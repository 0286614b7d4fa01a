"""Vertex classes, cycles, Condition (L) and hereditary saturated sets."""

import itertools
import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ...infrastructure.config import get_config
from ..entities.graph import Cycle, Graph
from ..exceptions.algebra_exceptions import BoundExceededError
from ..exceptions.element_exceptions import OutOfScopeError
from ..value_objects.paths import EdgeRef, Path
from ..value_objects.semiring import SemiringDescriptor
from ..value_objects.verdicts import SimplenessVerdict

logger = logging.getLogger(__name__)


class VertexClass(str, Enum):
    SINK = "sink"
    REGULAR = "regular"
    INFINITE_EMITTER = "infinite-emitter"


def classify_vertex(g: Graph, v: str) -> VertexClass:
    """Classify a vertex as sink, regular or infinite emitter.

    Raises:
        UnknownVertexError: If ``v`` is not a vertex of ``g``.
    """
    if g.is_infinite_emitter(v):
        return VertexClass.INFINITE_EMITTER
    if g.is_sink(v):
        return VertexClass.SINK
    return VertexClass.REGULAR


def is_row_finite(g: Graph) -> bool:
    return g.is_row_finite


def _parallel_refs(g: Graph) -> Dict[Tuple[str, str], List[Tuple[EdgeRef, bool]]]:
    parallel: Dict[Tuple[str, str], List[Tuple[EdgeRef, bool]]] = {}
    for e in g.edges:
        parallel.setdefault((e.source, e.range), []).append((EdgeRef(e.id), False))
    for b in g.bundles:
        parallel.setdefault((b.source, b.range), []).append((EdgeRef(b.id, 0), True))
    for refs in parallel.values():
        refs.sort(key=lambda item: item[0].sort_key())
    return parallel


def enumerate_cycles(g: Graph) -> List[Cycle]:
    """All cycles of ``g`` up to rotation, based at their least vertex.

    Simple cycles of the vertex digraph come from networkx and are expanded
    over parallel edges; a bundle contributes its member 0 and marks the
    cycle as standing for infinitely many parallel ones.
    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(g.vertices)
    parallel = _parallel_refs(g)
    digraph.add_edges_from(parallel)
    cycles: List[Cycle] = []
    for vertex_cycle in nx.simple_cycles(digraph):
        base = vertex_cycle.index(min(vertex_cycle))
        rotated = vertex_cycle[base:] + vertex_cycle[:base]
        hops = zip(rotated, rotated[1:] + rotated[:1])
        steps = [parallel[hop] for hop in hops]
        for choice in itertools.product(*steps):
            refs = tuple(ref for ref, _ in choice)
            cycles.append(
                Cycle(
                    path=Path(rotated[0], refs, rotated[0]),
                    parallel_family=any(is_bundle for _, is_bundle in choice),
                )
            )
    cycles.sort(key=lambda c: c.path.sort_key())
    logger.debug(f"found {len(cycles)} cycles in {g.name or 'graph'}")
    return cycles


def cycle_has_exit(g: Graph, c: Cycle) -> bool:
    """Check whether some edge leaves a vertex of ``c`` other than the cycle edge."""
    for ref in c.path.edges:
        u = g.source_of(ref)
        if g.is_infinite_emitter(u):
            return True
        if any(other != ref for other in g.out_edges(u)):
            return True
    return False


def condition_L(g: Graph) -> bool:
    """Condition (L): every cycle has an exit."""
    return all(cycle_has_exit(g, c) for c in enumerate_cycles(g))


def is_hereditary(g: Graph, subset: Iterable[str]) -> bool:
    members = set(subset)
    return all(
        record.range in members
        for record in list(g.edges) + list(g.bundles)
        if record.source in members
    )


def is_saturated(g: Graph, subset: Iterable[str]) -> bool:
    members = set(subset)
    for v in g.vertices:
        if v in members or not g.is_regular(v):
            continue
        if all(g.range_of(ref) in members for ref in g.out_edges(v)):
            return False
    return True


def hs_closure(g: Graph, seed: Iterable[str]) -> FrozenSet[str]:
    """Least hereditary saturated set containing ``seed``.

    Bundles count as single edges in the hereditary rule; saturation only
    fires at regular vertices.
    """
    closure = set()
    for v in seed:
        g.require_vertex(v)
        closure.add(v)
    records = list(g.edges) + list(g.bundles)
    changed = True
    while changed:
        changed = False
        for record in records:
            if record.source in closure and record.range not in closure:
                closure.add(record.range)
                changed = True
        for v in g.vertices:
            if v in closure or not g.is_regular(v):
                continue
            if all(g.range_of(ref) in closure for ref in g.out_edges(v)):
                closure.add(v)
                changed = True
    return frozenset(closure)


def all_hereditary_saturated(g: Graph, bound: Optional[int] = None) -> List[FrozenSet[str]]:
    """Enumerate every hereditary saturated subset, smallest first.

    Raises:
        BoundExceededError: If the graph has more vertices than the bound.
    """
    limit = bound if bound is not None else get_config().MAX_VERTICES
    vertices = g.sorted_vertices
    if len(vertices) > limit:
        raise BoundExceededError(
            "vertex count", len(vertices), limit, hint="use only_trivial_hs instead"
        )
    found = []
    for size in range(len(vertices) + 1):
        for subset in itertools.combinations(vertices, size):
            if is_hereditary(g, subset) and is_saturated(g, subset):
                found.append(frozenset(subset))
    return found


def only_trivial_hs(g: Graph) -> bool:
    """Check that ∅ and E⁰ are the only hereditary saturated sets."""
    everything = frozenset(g.vertices)
    return all(hs_closure(g, [v]) == everything for v in g.vertices)


def format_vertex_set(subset: Iterable[str]) -> str:
    return "{" + ",".join(sorted(subset)) + "}"


def _graph_conditions(g: Graph, s: SemiringDescriptor) -> SimplenessVerdict:
    failed = []
    reasons = []
    if not (s.is_field or s.is_boolean):
        failed.append(1)
        reasons.append(f"semiring {s.name} is neither a field nor the Boolean semifield")
    if not only_trivial_hs(g):
        failed.append(2)
        reasons.append("a nontrivial hereditary saturated subset exists")
    if not condition_L(g):
        failed.append(3)
        reasons.append("some cycle has no exit")
    return SimplenessVerdict(simple=not failed, failed=tuple(failed), reasons=tuple(reasons))


def steinberg_simple_decision(g: Graph, s: SemiringDescriptor) -> SimplenessVerdict:
    """Decide whether A_S(G_E) is congruence-simple.

    Simple iff (1) S is a field or B, (2) the only hereditary saturated
    subsets are trivial and (3) every cycle has an exit.
    """
    verdict = _graph_conditions(g, s)
    logger.info(f"A_{s.name}(G_E) simple={verdict.simple} for {g.name or 'graph'}")
    return verdict


def lpa_simple_decision(g: Graph, s: SemiringDescriptor) -> SimplenessVerdict:
    """Decide congruence-simpleness of L_S(E) for a row-finite graph.

    Raises:
        OutOfScopeError: If ``g`` has an infinite emitter.
    """
    if not g.is_row_finite:
        raise OutOfScopeError(
            "congruence-simpleness of L_S(E) is only decided for row-finite graphs"
        )
    return _graph_conditions(g, s)


def is_acyclic(g: Graph) -> bool:
    digraph = nx.MultiDiGraph()
    digraph.add_nodes_from(g.vertices)
    digraph.add_edges_from((r.source, r.range) for r in list(g.edges) + list(g.bundles))
    return nx.is_directed_acyclic_graph(digraph)


def sink_paths_from(g: Graph, v: str) -> List[Path]:
    """All paths from ``v`` ending at a sink, for acyclic bundle-free graphs."""
    found: List[Path] = []
    stack = [Path.vertex(v)]
    while stack:
        path = stack.pop()
        out = g.out_edges(path.end)
        if not out:
            found.append(path)
            continue
        for ref in out:
            stack.append(path.extend((ref,), g.range_of(ref)))
    found.sort(key=Path.sort_key)
    return found
