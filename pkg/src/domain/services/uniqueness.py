"""Graded and Cuntz-Krieger uniqueness checks for maps out of L_B(E).

A homomorphism is given by the images of the generators v, e and e* in a
target algebra with decidable equality. Before any verdict the images are
checked against the defining relations of L_B(E):

    (1) vw = δ_{v,w} v
    (2) s(e) e = e = e r(e),  r(e) e* = e* = e* s(e)
    (3) e* f = δ_{e,f} r(e)
    (4) v = Σ_{s(e)=v} e e*  for every regular v
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Protocol

from ..entities.cylinder import SteinbergElt
from ..entities.finite_algebra import FiniteAlgebra
from ..entities.graph import Cycle, Graph
from ..exceptions.algebra_exceptions import PreconditionError
from ..exceptions.element_exceptions import (
    ConditionLRequiredError,
    NotAHomomorphismError,
    OutOfScopeError,
)
from ..value_objects.laurent import LaurentPolyB
from ..value_objects.paths import EdgeRef, Path
from ..value_objects.verdicts import UniquenessVerdict
from . import cylinder_calculus as cc
from .graph_analysis import condition_L, cycle_has_exit, enumerate_cycles

logger = logging.getLogger(__name__)


class TargetAlgebra(Protocol):
    """What the checkers need from the codomain of a homomorphism."""

    def zero(self) -> Any: ...

    def add(self, x: Any, y: Any) -> Any: ...

    def mul(self, x: Any, y: Any) -> Any: ...

    def equals(self, x: Any, y: Any) -> bool: ...

    def describe(self, x: Any) -> str: ...


class FiniteTarget:
    """Adapter for a FiniteAlgebra; elements are carrier indices."""

    is_finite = True

    def __init__(self, alg: FiniteAlgebra):
        self.alg = alg

    def zero(self) -> int:
        return self.alg.zero

    def add(self, x: int, y: int) -> int:
        return self.alg.add(x, y)

    def mul(self, x: int, y: int) -> int:
        return self.alg.mul(x, y)

    def equals(self, x: int, y: int) -> bool:
        return x == y

    def describe(self, x: int) -> str:
        return self.alg.label(x)


class CylinderTarget:
    """Adapter for A_B(G_F) of a finite graph F; elements are SteinbergElts."""

    is_finite = False

    def __init__(self, graph: Graph):
        self.graph = graph

    def zero(self) -> SteinbergElt:
        return cc.zero_element(self.graph)

    def add(self, x: SteinbergElt, y: SteinbergElt) -> SteinbergElt:
        return cc.add(x, y)

    def mul(self, x: SteinbergElt, y: SteinbergElt) -> SteinbergElt:
        return cc.mul(x, y)

    def equals(self, x: SteinbergElt, y: SteinbergElt) -> bool:
        return cc.equals(x, y)

    def describe(self, x: SteinbergElt) -> str:
        return str(x)


@dataclass
class HomSpec:
    """Generator images of a homomorphism L_B(E) → target."""

    graph: Graph
    target: Any
    vertex_images: Dict[str, Any] = field(default_factory=dict)
    edge_images: Dict[str, Any] = field(default_factory=dict)
    ghost_images: Dict[str, Any] = field(default_factory=dict)

    def image_of_path(self, path: Path) -> Any:
        image = self.vertex_images[path.start]
        for ref in path.edges:
            image = self.target.mul(image, self.edge_images[ref.name])
        return image

    def image_of_ghost_path(self, path: Path) -> Any:
        """φ(p*) = φ(e_n*)···φ(e_1*)."""
        image = self.vertex_images[path.end]
        for ref in reversed(path.edges):
            image = self.target.mul(image, self.ghost_images[ref.name])
        return image


def pi_E_hom_spec(g: Graph) -> HomSpec:
    """π_E as generator images in A_B(G_E)."""
    return HomSpec(
        graph=g,
        target=CylinderTarget(g),
        vertex_images={v: cc.vertex_indicator(g, v) for v in g.vertices},
        edge_images={e.id: cc.edge_indicator(g, EdgeRef(e.id)) for e in g.edges},
        ghost_images={e.id: cc.ghost_indicator(g, EdgeRef(e.id)) for e in g.edges},
    )


def validate_hom_spec(spec: HomSpec) -> None:
    """Check the defining relations (1)-(4) on every generator.

    Raises:
        OutOfScopeError: If the graph has bundles.
        PreconditionError: If some generator has no image.
        NotAHomomorphismError: Naming the first violated relation.
    """
    g, t = spec.graph, spec.target
    if not g.is_row_finite:
        raise OutOfScopeError("uniqueness checks need a row-finite graph")
    missing = [v for v in g.vertices if v not in spec.vertex_images]
    missing += [e.id for e in g.edges if e.id not in spec.edge_images]
    missing += [f"{e.id}*" for e in g.edges if e.id not in spec.ghost_images]
    if missing:
        raise PreconditionError(f"no image given for {', '.join(missing)}")
    V, E, G = spec.vertex_images, spec.edge_images, spec.ghost_images
    zero = t.zero()
    for v in g.vertices:
        for w in g.vertices:
            expected = V[v] if v == w else zero
            if not t.equals(t.mul(V[v], V[w]), expected):
                raise NotAHomomorphismError("(1)", f"{v}{w}")
    for e in g.edges:
        edge, ghost = E[e.id], G[e.id]
        if not (
            t.equals(t.mul(V[e.source], edge), edge) and t.equals(t.mul(edge, V[e.range]), edge)
        ):
            raise NotAHomomorphismError("(2)", e.id)
        if not (
            t.equals(t.mul(V[e.range], ghost), ghost)
            and t.equals(t.mul(ghost, V[e.source]), ghost)
        ):
            raise NotAHomomorphismError("(2)", f"{e.id}*")
    for e in g.edges:
        for f in g.edges:
            expected = V[e.range] if e.id == f.id else zero
            if not t.equals(t.mul(G[e.id], E[f.id]), expected):
                raise NotAHomomorphismError("(3)", f"{e.id}*{f.id}")
    for v in g.vertices:
        if not g.is_regular(v):
            continue
        total = zero
        for ref in g.out_edges(v):
            total = t.add(total, t.mul(E[ref.name], G[ref.name]))
        if not t.equals(total, V[v]):
            raise NotAHomomorphismError("(4)", v)


def _exitless_cycles(g: Graph) -> List[Cycle]:
    return [c for c in enumerate_cycles(g) if not cycle_has_exit(g, c)]


def _vertex_collapse(spec: HomSpec) -> Optional[UniquenessVerdict]:
    t = spec.target
    for v in spec.graph.sorted_vertices:
        if t.equals(spec.vertex_images[v], t.zero()):
            return UniquenessVerdict(
                injective=False, condition=1, reason=f"φ({v}) = 0", witness=(v,)
            )
    return None


def _power_repeat(spec: HomSpec, c: Cycle, limit: Optional[int]) -> Optional[UniquenessVerdict]:
    """Look for k < l with φ(c)^k = φ(c)^l, where φ(c)^0 = φ(v)."""
    t = spec.target
    phi_c = spec.image_of_path(c.path)
    power = spec.vertex_images[c.base]
    seen: List[Any] = []
    l = 0
    while limit is None or l <= limit:
        for k, earlier in enumerate(seen):
            if t.equals(earlier, power):
                p, q = LaurentPolyB.monomial(k), LaurentPolyB.monomial(l)
                return UniquenessVerdict(
                    injective=False,
                    condition=2,
                    reason=f"φ({p}) = φ({q}) at exitless cycle {c.path}",
                    witness=(str(p), str(q)),
                )
        seen.append(power)
        power = t.mul(power, phi_c)
        l += 1
    return None


def _separated_by_degree(spec: HomSpec, c: Cycle) -> bool:
    """Certify that distinct Laurent polynomials in c have distinct images.

    Holds when φ(c) is homogeneous of nonzero degree and φ(c) is unitary
    at φ(v): then the powers of φ(c) and φ(c*) live in pairwise distinct
    degrees and are all nonzero.
    """
    t = spec.target
    phi_c = spec.image_of_path(c.path)
    phi_cs = spec.image_of_ghost_path(c.path)
    phi_v = spec.vertex_images[c.base]
    degrees = cc.degrees(phi_c)
    return (
        len(degrees) == 1
        and degrees[0] != 0
        and t.equals(t.mul(phi_cs, phi_c), phi_v)
        and t.equals(t.mul(phi_c, phi_cs), phi_v)
    )


def graded_uniqueness_check(spec: HomSpec, max_power: Optional[int] = None) -> UniquenessVerdict:
    """Decide injectivity by the graded uniqueness criterion.

    Args:
        spec: Generator images; validated against the defining relations first.
        max_power: Power-search bound for infinite targets (defaults to 32).

    Returns:
        UniquenessVerdict: injective, not injective with a witness, or
        inconclusive when an infinite target could not be certified.
    """
    validate_hom_spec(spec)
    collapse = _vertex_collapse(spec)
    if collapse is not None:
        return collapse
    finite = getattr(spec.target, "is_finite", False)
    limit = None if finite else (max_power if max_power is not None else 32)
    undecided = []
    for c in _exitless_cycles(spec.graph):
        if not finite and _separated_by_degree(spec, c):
            continue
        repeat = _power_repeat(spec, c, limit)
        if repeat is not None:
            logger.info(f"graded uniqueness fails: {repeat.reason}")
            return repeat
        undecided.append(str(c.path))
    if undecided:
        return UniquenessVerdict(
            injective=None,
            condition=2,
            reason=f"no repetition among the first {limit} powers of cycles {', '.join(undecided)}",
        )
    return UniquenessVerdict(
        injective=True, reason="φ(v) ≠ 0 for every vertex and every exitless cycle is separated"
    )


def ck_uniqueness_check(spec: HomSpec) -> UniquenessVerdict:
    """Decide injectivity by the Cuntz-Krieger uniqueness criterion.

    Raises:
        ConditionLRequiredError: If some cycle has no exit.
    """
    if not condition_L(spec.graph):
        raise ConditionLRequiredError()
    validate_hom_spec(spec)
    collapse = _vertex_collapse(spec)
    if collapse is not None:
        return collapse
    return UniquenessVerdict(injective=True, reason="φ(v) ≠ 0 for every vertex")


def finite_hom_spec(
    g: Graph,
    alg: FiniteAlgebra,
    vertex_images: Dict[str, int],
    edge_images: Dict[str, int],
    ghost_images: Dict[str, int],
) -> HomSpec:
    return HomSpec(g, FiniteTarget(alg), dict(vertex_images), dict(edge_images), dict(ghost_images))