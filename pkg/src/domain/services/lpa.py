"""The Leavitt path algebra L_B(E) and the natural map π_E into A_B(G_E)."""

import logging
from typing import Iterable, Optional

from ..entities.cylinder import Cylinder, SteinbergElt
from ..entities.graph import Cycle, Graph
from ..entities.lpa_term import LpaTerm, Monomial
from ..exceptions.element_exceptions import MixedGraphError, OutOfScopeError, RangeMismatchError
from ..value_objects.laurent import LaurentPolyB
from ..value_objects.paths import EdgeRef, Path
from ..value_objects.verdicts import CheckReport
from . import cylinder_calculus as cc

logger = logging.getLogger(__name__)


def lpa_zero(g: Graph) -> LpaTerm:
    return LpaTerm(g)


def lpa_vertex(g: Graph, v: str) -> LpaTerm:
    g.require_vertex(v)
    return LpaTerm(g, [(Path.vertex(v), Path.vertex(v))])


def lpa_edge(g: Graph, ref: EdgeRef) -> LpaTerm:
    edge = g.edge_path(ref)
    return LpaTerm(g, [(edge, Path.vertex(edge.end))])


def lpa_ghost(g: Graph, ref: EdgeRef) -> LpaTerm:
    edge = g.edge_path(ref)
    return LpaTerm(g, [(Path.vertex(edge.end), edge)])


def lpa_monomial(g: Graph, p: Path, q: Path) -> LpaTerm:
    """The monomial p q*.

    Raises:
        RangeMismatchError: If r(p) ≠ r(q).
    """
    if p.end != q.end:
        raise RangeMismatchError(str(p), str(q))
    return LpaTerm(g, [(p, q)])


def _check_same_graph(t1: LpaTerm, t2: LpaTerm) -> None:
    if t1.graph is not t2.graph and t1.graph != t2.graph:
        raise MixedGraphError()


def graph_inverse_semigroup_mul(
    g: Graph, a: Optional[Monomial], b: Optional[Monomial]
) -> Optional[Monomial]:
    """Product in the graph inverse semigroup G(E), with None as zero.

    (p q*)(γ δ*) = pε δ* if γ = qε, p (δε)* if q = γε, and 0 otherwise.
    """
    if a is None or b is None:
        return None
    p, q = a
    gamma, delta = b
    if q.is_prefix_of(gamma):
        return (g.extend(p, gamma.suffix_after(q)), delta)
    if gamma.is_prefix_of(q):
        return (p, g.extend(delta, q.suffix_after(gamma)))
    return None


def lpa_add(t1: LpaTerm, t2: LpaTerm) -> LpaTerm:
    _check_same_graph(t1, t2)
    return LpaTerm(t1.graph, t1.monomials | t2.monomials)


def lpa_sum(g: Graph, terms: Iterable[LpaTerm]) -> LpaTerm:
    monomials = set()
    for term in terms:
        monomials |= term.monomials
    return LpaTerm(g, monomials)


def lpa_mul(t1: LpaTerm, t2: LpaTerm) -> LpaTerm:
    _check_same_graph(t1, t2)
    products = set()
    for a in t1.monomials:
        for b in t2.monomials:
            product = graph_inverse_semigroup_mul(t1.graph, a, b)
            if product is not None:
                products.add(product)
    return LpaTerm(t1.graph, products)


def lpa_star(t: LpaTerm) -> LpaTerm:
    return LpaTerm(t.graph, [(q, p) for p, q in t.monomials])


def pi_E(t: LpaTerm) -> SteinbergElt:
    """π_E(Σ p q*) = 1 of the union of the Z(p, q)."""
    return cc.canonicalize(t.graph, [Cylinder(p, q) for p, q in t.monomials])


def lpa_equals(t1: LpaTerm, t2: LpaTerm) -> bool:
    """Decide equality in L_B(E) through π_E.

    Raises:
        OutOfScopeError: If the graph is not row-finite.
    """
    _check_same_graph(t1, t2)
    if not t1.graph.is_row_finite:
        logger.warning(f"equality requested over non-row-finite graph {t1.graph.name or ''}")
        raise OutOfScopeError("equality undecided in scope; π_E not injective-certified here")
    return cc.equals(pi_E(t1), pi_E(t2))


def cycle_power(c: Cycle, k: int) -> Path:
    """c^k as a path; c^0 is the base vertex."""
    if k == 0:
        return Path.vertex(c.base)
    return Path(c.base, c.path.edges * k, c.base)


def eval_cycle_poly(g: Graph, p: LaurentPolyB, c: Cycle) -> LpaTerm:
    """Substitute a cycle into a Laurent polynomial: x^i ↦ c^i, x^-i ↦ (c*)^i."""
    base = Path.vertex(c.base)
    monomials = []
    for i in p.exponents:
        if i >= 0:
            monomials.append((cycle_power(c, i), base))
        else:
            monomials.append((base, cycle_power(c, -i)))
    return LpaTerm(g, monomials)


def check_defining_relations(g: Graph) -> CheckReport:
    """Certify the relations (1)-(4) of L_B(E) on every generator through lpa_equals.

    Raises:
        OutOfScopeError: If the graph is not row-finite.
    """
    name = f"defining relations of L_B({g.name or 'E'})"
    zero = lpa_zero(g)
    examined = 0

    def holds(left: LpaTerm, right: LpaTerm) -> bool:
        nonlocal examined
        examined += 1
        return lpa_equals(left, right)

    vertices = {v: lpa_vertex(g, v) for v in g.sorted_vertices}
    for v, tv in vertices.items():
        for w, tw in vertices.items():
            if not holds(lpa_mul(tv, tw), tv if v == w else zero):
                return CheckReport(name, f"(1) fails for {v}{w}", examined)
    edges = {e.id: (lpa_edge(g, EdgeRef(e.id)), lpa_ghost(g, EdgeRef(e.id)), e) for e in g.edges}
    for eid, (te, tg, record) in edges.items():
        s, r = vertices[record.source], vertices[record.range]
        if not (holds(lpa_mul(s, te), te) and holds(lpa_mul(te, r), te)):
            return CheckReport(name, f"(2) fails for {eid}", examined)
        if not (holds(lpa_mul(r, tg), tg) and holds(lpa_mul(tg, s), tg)):
            return CheckReport(name, f"(2) fails for {eid}*", examined)
    for eid, (_, tg, record) in edges.items():
        for fid, (tf, _, _) in edges.items():
            expected = vertices[record.range] if eid == fid else zero
            if not holds(lpa_mul(tg, tf), expected):
                return CheckReport(name, f"(3) fails for {eid}*{fid}", examined)
    for v, tv in vertices.items():
        if not g.is_regular(v):
            continue
        ck_sum = lpa_sum(
            g, [lpa_mul(edges[ref.name][0], edges[ref.name][1]) for ref in g.out_edges(v)]
        )
        if not holds(tv, ck_sum):
            return CheckReport(name, f"(4) fails at {v}", examined)
    return CheckReport(name, None, examined)
