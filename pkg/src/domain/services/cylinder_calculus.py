"""Exact arithmetic in the Steinberg algebra A_B(G_E) of a finite graph.

Compact open subsets of the graph groupoid are kept as prefix trees per
reduced root (see ``entities.cylinder``). Union, intersection and
difference are computed on the trees; products of cylinders use

    Z(α,β)·Z(γ,δ) = Z(αε, δ) if γ = βε,  Z(α, δε) if β = γε,  ∅ otherwise,

and, for excluded sets, (A∖A')(B∖B') = AB ∖ A'B ∖ AB' which holds for
bisections because factorizations in AB are unique.
"""

import logging
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..entities.cylinder import EMPTY, FULL, Cylinder, Leaf, Node, Root, Shape, SteinbergElt
from ..entities.graph import Graph
from ..exceptions.element_exceptions import MixedGraphError, RangeMismatchError
from ..exceptions.graph_exceptions import GraphShapeError
from ..value_objects.paths import EdgeRef, Path

logger = logging.getLogger(__name__)

BoolOp = Callable[[bool, bool], bool]


def _union_op(x: bool, y: bool) -> bool:
    return x or y


def _intersect_op(x: bool, y: bool) -> bool:
    return x and y


def _difference_op(x: bool, y: bool) -> bool:
    return x and not y


class CylinderRelation(str, Enum):
    """Set relation between two cylinders."""

    DISJOINT = "disjoint"
    EQUAL = "equal"
    FIRST_IN_SECOND = "c1⊂c2"
    SECOND_IN_FIRST = "c2⊂c1"
    OVERLAP_AT_EMITTER = "overlap-at-emitter"


# --------------------------------------------------------------------------
# Prefix trees
# --------------------------------------------------------------------------


def _make(graph: Graph, w: str, point: bool, children: Dict[EdgeRef, Shape]) -> Shape:
    """Normalize a node at vertex ``w``."""
    if graph.is_sink(w):
        return FULL if point else EMPTY
    if graph.is_infinite_emitter(w):
        default = FULL if point else EMPTY
        kept = {ref: s for ref, s in children.items() if s != default}
        if not kept:
            return default
        return Node(point, tuple(sorted(kept.items(), key=lambda item: item[0].sort_key())))
    kept = {ref: s for ref, s in children.items() if s != EMPTY}
    if not kept:
        return EMPTY
    out = graph.out_edges(w)
    if len(kept) == len(out) and all(s == FULL for s in kept.values()):
        return FULL
    return Node(False, tuple(sorted(kept.items(), key=lambda item: item[0].sort_key())))


def _point(shape: Shape) -> bool:
    return shape.full if isinstance(shape, Leaf) else shape.point


def _child(graph: Graph, w: str, shape: Shape, ref: EdgeRef) -> Shape:
    if isinstance(shape, Leaf):
        return shape
    if graph.is_infinite_emitter(w):
        return shape.child(ref, FULL if shape.point else EMPTY)
    return shape.child(ref, EMPTY)


def _combine(graph: Graph, w: str, a: Shape, b: Shape, op: BoolOp) -> Shape:
    if isinstance(a, Leaf) and isinstance(b, Leaf):
        return Leaf(op(a.full, b.full))
    if op is _union_op:
        if a == FULL or b == FULL:
            return FULL
        if a == EMPTY:
            return b
        if b == EMPTY:
            return a
    elif op is _intersect_op:
        if a == EMPTY or b == EMPTY:
            return EMPTY
        if a == FULL:
            return b
        if b == FULL:
            return a
    else:
        if a == EMPTY or b == FULL:
            return EMPTY
        if b == EMPTY:
            return a

    if graph.is_infinite_emitter(w):
        keys = {ref for shape in (a, b) if isinstance(shape, Node) for ref, _ in shape.children}
    else:
        keys = set(graph.out_edges(w))
    children = {
        ref: _combine(
            graph, graph.range_of(ref), _child(graph, w, a, ref), _child(graph, w, b, ref), op
        )
        for ref in keys
    }
    point = op(_point(a), _point(b)) if graph.is_infinite_emitter(w) else False
    return _make(graph, w, point, children)


def _tree_below(graph: Graph, w: str, eps: Sequence[EdgeRef], excluded: Iterable[EdgeRef]) -> Shape:
    """The tree at ``w`` selecting boundary paths ε·x with x not starting in ``excluded``."""
    vertices = [w]
    for ref in eps:
        vertices.append(graph.range_of(ref))
    u = vertices[-1]
    excluded = frozenset(excluded)
    for ref in excluded:
        if not graph.has_ref(ref) or graph.source_of(ref) != u:
            raise GraphShapeError(f"excluded edge {ref} does not leave {u}")
    if not excluded:
        shape: Shape = FULL
    elif graph.is_infinite_emitter(u):
        shape = _make(graph, u, True, {ref: EMPTY for ref in excluded})
    else:
        kept = {ref: FULL for ref in graph.out_edges(u) if ref not in excluded}
        shape = _make(graph, u, False, kept)
    for i in range(len(eps) - 1, -1, -1):
        shape = _make(graph, vertices[i], False, {eps[i]: shape})
    return shape


def reduce_root(graph: Graph, alpha: Path, beta: Path) -> Tuple[Root, Tuple[EdgeRef, ...]]:
    """Strip the longest common final segment ε of α and β.

    Returns:
        Tuple[Root, Tuple[EdgeRef, ...]]: The reduced root (α₀, β₀) and ε.
    """
    k = 0
    while (
        k < len(alpha.edges)
        and k < len(beta.edges)
        and alpha.edges[-1 - k] == beta.edges[-1 - k]
    ):
        k += 1
    if k == 0:
        return (alpha, beta), ()
    eps = alpha.edges[len(alpha.edges) - k :]
    joint = graph.source_of(eps[0])
    alpha0 = Path(alpha.start, alpha.edges[: len(alpha.edges) - k], joint)
    beta0 = Path(beta.start, beta.edges[: len(beta.edges) - k], joint)
    return (alpha0, beta0), eps


def _cylinder_shapes(graph: Graph, cylinder: Cylinder) -> Dict[Root, Shape]:
    if cylinder.alpha.end != cylinder.beta.end:
        raise RangeMismatchError(str(cylinder.alpha), str(cylinder.beta))
    root, eps = reduce_root(graph, cylinder.alpha, cylinder.beta)
    shape = _tree_below(graph, root[0].end, eps, cylinder.excluded)
    return {root: shape} if shape != EMPTY else {}


def _merge(
    graph: Graph, left: Dict[Root, Shape], right: Dict[Root, Shape], op: BoolOp
) -> Dict[Root, Shape]:
    if op is _union_op:
        roots = set(left) | set(right)
    elif op is _intersect_op:
        roots = set(left) & set(right)
    else:
        roots = set(left)
    merged = {}
    for root in roots:
        shape = _combine(graph, root[0].end, left.get(root, EMPTY), right.get(root, EMPTY), op)
        if shape != EMPTY:
            merged[root] = shape
    return merged


def _check_same_graph(a: SteinbergElt, b: SteinbergElt) -> None:
    if a.graph is not b.graph and a.graph != b.graph:
        raise MixedGraphError()


# --------------------------------------------------------------------------
# Public operations
# --------------------------------------------------------------------------


def zero_element(graph: Graph) -> SteinbergElt:
    return SteinbergElt(graph, {})


def canonicalize(graph: Graph, cylinders: Iterable[Cylinder]) -> SteinbergElt:
    """Canonical form of the union of the given cylinders.

    Args:
        graph: Ambient graph.
        cylinders: Cylinders over ``graph``, in any order and possibly overlapping.

    Returns:
        SteinbergElt: Disjoint, merge-maximal, F-minimal and sorted.

    Raises:
        RangeMismatchError: If some cylinder has r(α) ≠ r(β).
        GraphShapeError: If an excluded edge does not leave r(α).
    """
    shapes: Dict[Root, Shape] = {}
    for cylinder in cylinders:
        shapes = _merge(graph, shapes, _cylinder_shapes(graph, cylinder), _union_op)
    return SteinbergElt(graph, shapes)


def add(a: SteinbergElt, b: SteinbergElt) -> SteinbergElt:
    _check_same_graph(a, b)
    return SteinbergElt(a.graph, _merge(a.graph, a.shapes, b.shapes, _union_op))


def intersect(a: SteinbergElt, b: SteinbergElt) -> SteinbergElt:
    _check_same_graph(a, b)
    return SteinbergElt(a.graph, _merge(a.graph, a.shapes, b.shapes, _intersect_op))


def difference(a: SteinbergElt, b: SteinbergElt) -> SteinbergElt:
    _check_same_graph(a, b)
    return SteinbergElt(a.graph, _merge(a.graph, a.shapes, b.shapes, _difference_op))


def sum_elements(graph: Graph, elements: Iterable[SteinbergElt]) -> SteinbergElt:
    total = zero_element(graph)
    for element in elements:
        total = add(total, element)
    return total


def _basic_product(
    graph: Graph, alpha: Path, beta: Path, gamma: Path, delta: Path
) -> Optional[Cylinder]:
    if beta.is_prefix_of(gamma):
        return Cylinder(graph.extend(alpha, gamma.suffix_after(beta)), delta)
    if gamma.is_prefix_of(beta):
        return Cylinder(alpha, graph.extend(delta, beta.suffix_after(gamma)))
    return None


def _cylinder_product(graph: Graph, c1: Cylinder, c2: Cylinder) -> Dict[Root, Shape]:
    whole = _basic_product(graph, c1.alpha, c1.beta, c2.alpha, c2.beta)
    if whole is None:
        return {}
    shapes = _cylinder_shapes(graph, whole)
    removed: List[Cylinder] = []
    for f in c1.excluded:
        end = graph.range_of(f)
        part = _basic_product(
            graph, c1.alpha.extend((f,), end), c1.beta.extend((f,), end), c2.alpha, c2.beta
        )
        if part is not None:
            removed.append(part)
    for g in c2.excluded:
        end = graph.range_of(g)
        part = _basic_product(
            graph, c1.alpha, c1.beta, c2.alpha.extend((g,), end), c2.beta.extend((g,), end)
        )
        if part is not None:
            removed.append(part)
    for part in removed:
        shapes = _merge(graph, shapes, _cylinder_shapes(graph, part), _difference_op)
        if not shapes:
            break
    return shapes


def mul(a: SteinbergElt, b: SteinbergElt) -> SteinbergElt:
    """Convolution product 1_U * 1_V = 1_{UV}."""
    _check_same_graph(a, b)
    graph = a.graph
    shapes: Dict[Root, Shape] = {}
    for c1 in a.cylinders:
        for c2 in b.cylinders:
            product = _cylinder_product(graph, c1, c2)
            if product:
                shapes = _merge(graph, shapes, product, _union_op)
    return SteinbergElt(graph, shapes)


def star(a: SteinbergElt) -> SteinbergElt:
    """Involution U ↦ U⁻¹: swap α and β in every root."""
    return SteinbergElt(a.graph, {(beta0, alpha0): s for (alpha0, beta0), s in a.shapes.items()})


def equals(a: SteinbergElt, b: SteinbergElt) -> bool:
    _check_same_graph(a, b)
    return a.cylinders == b.cylinders


def contains(a: SteinbergElt, b: SteinbergElt) -> bool:
    """Check b ⊆ a."""
    return difference(b, a).is_zero


def cylinder_compare(graph: Graph, c1: Cylinder, c2: Cylinder) -> CylinderRelation:
    """Decide the set relation between two cylinders."""
    e1 = canonicalize(graph, [c1])
    e2 = canonicalize(graph, [c2])
    if intersect(e1, e2).is_zero:
        return CylinderRelation.DISJOINT
    first_in_second = difference(e1, e2).is_zero
    second_in_first = difference(e2, e1).is_zero
    if first_in_second and second_in_first:
        return CylinderRelation.EQUAL
    if first_in_second:
        return CylinderRelation.FIRST_IN_SECOND
    if second_in_first:
        return CylinderRelation.SECOND_IN_FIRST
    return CylinderRelation.OVERLAP_AT_EMITTER


def vertex_indicator(graph: Graph, v: str) -> SteinbergElt:
    graph.require_vertex(v)
    path = Path.vertex(v)
    return canonicalize(graph, [Cylinder(path, path)])


def edge_indicator(graph: Graph, ref: EdgeRef) -> SteinbergElt:
    edge = graph.edge_path(ref)
    return canonicalize(graph, [Cylinder(edge, Path.vertex(edge.end))])


def ghost_indicator(graph: Graph, ref: EdgeRef) -> SteinbergElt:
    edge = graph.edge_path(ref)
    return canonicalize(graph, [Cylinder(Path.vertex(edge.end), edge)])


def pair_indicator(
    graph: Graph, p: Path, q: Path, excluded: Iterable[EdgeRef] = ()
) -> SteinbergElt:
    """Indicator of Z(p, q, F).

    Raises:
        RangeMismatchError: If r(p) ≠ r(q).
    """
    if p.end != q.end:
        raise RangeMismatchError(str(p), str(q))
    return canonicalize(graph, [Cylinder(p, q, frozenset(excluded))])


def unit_element(graph: Graph) -> SteinbergElt:
    """Σ_v 1_{Z(v,v)}, the identity of A_B(G_E) for a finite vertex set."""
    return canonicalize(graph, [Cylinder(Path.vertex(v), Path.vertex(v)) for v in graph.vertices])


def in_pi_image(a: SteinbergElt) -> bool:
    """Check whether ``a`` lies in the image of the natural map from L_B(E)."""
    return all(not c.excluded for c in a.cylinders)


def support_vertices(a: SteinbergElt) -> List[str]:
    """Vertices v with 1_{Z(v,v)}·a ≠ 0 or a·1_{Z(v,v)} ≠ 0."""
    found = set()
    for c in a.cylinders:
        found.add(c.alpha.start)
        found.add(c.beta.start)
    return sorted(found)


def degrees(a: SteinbergElt) -> List[int]:
    """Sorted distinct degrees |α|−|β| of the canonical cylinders."""
    return sorted({c.degree for c in a.cylinders})


def expand_cylinder(graph: Graph, cylinder: Cylinder) -> List[Cylinder]:
    """Split one cylinder into an equivalent list one level deeper.

    Regular ends are replaced by their child family, and at an infinite
    emitter one fresh bundle member is split off. Used by the confluence
    checks; sinks are returned unchanged.
    """
    u = cylinder.vertex
    if graph.is_sink(u):
        return [cylinder]
    if graph.is_regular(u):
        out = []
        for ref in graph.out_edges(u):
            if ref in cylinder.excluded:
                continue
            end = graph.range_of(ref)
            out.append(
                Cylinder(cylinder.alpha.extend((ref,), end), cylinder.beta.extend((ref,), end))
            )
        return out
    candidates = list(graph.out_edges(u))
    for bundle in graph.out_bundles(u):
        index = 0
        while EdgeRef(bundle.id, index) in cylinder.excluded:
            index += 1
        candidates.append(EdgeRef(bundle.id, index))
    fresh = next((ref for ref in candidates if ref not in cylinder.excluded), None)
    if fresh is None:
        return [cylinder]
    end = graph.range_of(fresh)
    logger.debug(f"splitting {cylinder} at {fresh}")
    return [
        Cylinder(cylinder.alpha, cylinder.beta, cylinder.excluded | {fresh}),
        Cylinder(cylinder.alpha.extend((fresh,), end), cylinder.beta.extend((fresh,), end)),
    ]
