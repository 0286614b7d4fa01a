"""Bridge from the cylinder calculus to the finite graph groupoid.

For an acyclic bundle-free graph the boundary paths are exactly the paths
ending at sinks, so every cylinder is a finite set of groupoid morphisms
and A_B(G_E) can be compared with the brute-force algebra of subsets.
"""

from typing import FrozenSet, Iterable, Optional

from ..entities.cylinder import Cylinder, SteinbergElt
from ..entities.graph import Graph
from ..entities.groupoid import FiniteGroupoid
from ..exceptions.graph_exceptions import GraphShapeError
from .graph_analysis import is_acyclic, sink_paths_from
from .groupoids import graph_groupoid_finite, morphism_label


def _require_finite_unit_space(graph: Graph) -> None:
    if not graph.is_row_finite or not is_acyclic(graph):
        raise GraphShapeError("infinite unit space; use cylinder-calculus")


def cylinder_morphisms(graph: Graph, cylinder: Cylinder) -> Iterable[str]:
    """Labels (αε, k, βε) of the morphisms inside Z(α, β, F)."""
    for eps in sink_paths_from(graph, cylinder.vertex):
        if eps.edges and eps.edges[0] in cylinder.excluded:
            continue
        p = cylinder.alpha.concat(eps)
        q = cylinder.beta.concat(eps)
        yield morphism_label(p, q)


def to_finite_oracle(
    graph: Graph, element: SteinbergElt, groupoid: Optional[FiniteGroupoid] = None
) -> FrozenSet[int]:
    """Expand an element to the set of groupoid morphisms it contains.

    Args:
        graph: An acyclic graph without bundles.
        element: Element of A_B(G_E) over the same graph.
        groupoid: graph_groupoid_finite(graph), when the caller already has it.

    Returns:
        FrozenSet[int]: Morphism indices of ``groupoid``.

    Raises:
        GraphShapeError: For cyclic graphs or graphs with bundles.
    """
    _require_finite_unit_space(graph)
    if groupoid is None:
        groupoid = graph_groupoid_finite(graph)
    indices = set()
    for cylinder in element.cylinders:
        for label in cylinder_morphisms(graph, cylinder):
            indices.add(groupoid.index_of(label))
    return frozenset(indices)


def oracle_mask(indices: Iterable[int]) -> int:
    """Bitmask of a morphism set, the carrier encoding of steinberg_finite."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask
