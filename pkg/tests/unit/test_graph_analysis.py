"""Unit tests for graphs and the graph-theoretic decision procedures."""

import pytest

from src.domain.entities.graph import EdgeRecord, Graph
from src.domain.exceptions import (
    BoundExceededError,
    GraphSemanticError,
    GraphShapeError,
    OutOfScopeError,
    UnknownVertexError,
)
from src.domain.services.finite_algebras import instantiate_semiring
from src.domain.services.graph_analysis import (
    VertexClass,
    all_hereditary_saturated,
    classify_vertex,
    condition_L,
    enumerate_cycles,
    format_vertex_set,
    hs_closure,
    is_acyclic,
    is_hereditary,
    is_saturated,
    lpa_simple_decision,
    only_trivial_hs,
    sink_paths_from,
    steinberg_simple_decision,
)
from src.domain.value_objects.paths import EdgeRef


class TestGraph:
    """Test the Graph entity."""

    def test_duplicate_vertex(self):
        """Vertex ids must be unique."""
        with pytest.raises(GraphSemanticError):
            Graph(["v", "v"])

    def test_edge_shares_vertex_id(self):
        """Edges and vertices share one namespace."""
        with pytest.raises(GraphSemanticError):
            Graph(["v"], [EdgeRecord("v", "v", "v")])

    def test_undeclared_endpoint(self):
        """Edges must join declared vertices."""
        with pytest.raises(GraphSemanticError) as exc_info:
            Graph(["v"], [EdgeRecord("e", "v", "w")])
        assert exc_info.value.identifier == "w"

    def test_out_edges_sorted(self, r2):
        """Out-edges are listed by id."""
        assert r2.out_edges("v") == (EdgeRef("e"), EdgeRef("f"))

    def test_unknown_vertex(self, e2):
        """Querying a missing vertex fails."""
        with pytest.raises(UnknownVertexError):
            e2.out_edges("x")

    def test_path_composition(self, e2):
        """Paths must follow ranges."""
        path = e2.path("v", [EdgeRef("e")])
        assert path.end == "w"
        assert str(path) == "e"
        with pytest.raises(GraphShapeError):
            e2.path("w", [EdgeRef("e")])

    def test_bundle_members(self, romega):
        """Bundle members are addressed by index."""
        assert romega.source_of(EdgeRef("es", 5)) == "v"
        assert str(romega.edge_path(EdgeRef("es", 5))) == "es[5]"
        assert not romega.is_row_finite

    def test_equality_ignores_order(self):
        """Graphs with the same records are equal."""
        a = Graph(["v", "w"], [EdgeRecord("e", "v", "w")])
        b = Graph(["w", "v"], [EdgeRecord("e", "v", "w")])
        assert a == b
        assert hash(a) == hash(b)


class TestVertexClasses:
    """Test vertex classification."""

    def test_classes(self, e2, romega):
        """Sinks, regular vertices and infinite emitters are told apart."""
        assert classify_vertex(e2, "v") == VertexClass.REGULAR
        assert classify_vertex(e2, "w") == VertexClass.SINK
        assert classify_vertex(romega, "v") == VertexClass.INFINITE_EMITTER

    def test_unknown_vertex(self, e2):
        """Classification of a missing vertex fails."""
        with pytest.raises(UnknownVertexError):
            classify_vertex(e2, "x")


class TestCycles:
    """Test cycle enumeration and Condition (L)."""

    def test_rose_with_two_petals(self, r2):
        """R2 has the two loops as cycles, each with an exit."""
        cycles = enumerate_cycles(r2)
        assert [str(c) for c in cycles] == ["e", "f"]
        assert condition_L(r2)

    def test_single_loop_has_no_exit(self, r1):
        """The loop of R1 has no exit."""
        assert len(enumerate_cycles(r1)) == 1
        assert not condition_L(r1)

    def test_bundle_cycle(self, romega):
        """A bundle loop is one representative standing for a parallel family."""
        (cycle,) = enumerate_cycles(romega)
        assert cycle.parallel_family
        assert str(cycle) == "es[0] (+ parallel family)"
        assert condition_L(romega)

    def test_acyclic(self, e2, e4, r1):
        """Graphs without cycles satisfy Condition (L) vacuously."""
        assert enumerate_cycles(e4) == []
        assert condition_L(e4)
        assert is_acyclic(e2)
        assert not is_acyclic(r1)

    def test_two_vertex_cycle(self):
        """A cycle is based at its least vertex."""
        g = Graph(["b", "a"], [EdgeRecord("x", "b", "a"), EdgeRecord("y", "a", "b")])
        (cycle,) = enumerate_cycles(g)
        assert cycle.base == "a"
        assert str(cycle) == "y.x"
        assert not condition_L(g)


class TestHereditarySaturated:
    """Test hereditary saturated subsets."""

    def test_membership(self, e2):
        """{w} is hereditary but not saturated in E2."""
        assert is_hereditary(e2, ["w"])
        assert not is_saturated(e2, ["w"])
        assert not is_hereditary(e2, ["v"])

    def test_closure(self, e2, isolated):
        """The closure of {w} in E2 is everything; in the isolated graph it stays {u}."""
        assert hs_closure(e2, ["w"]) == frozenset({"v", "w"})
        assert hs_closure(isolated, ["u"]) == frozenset({"u"})
        assert hs_closure(e2, []) == frozenset()

    def test_closure_unknown_vertex(self, e2):
        """Seeds must be vertices."""
        with pytest.raises(UnknownVertexError):
            hs_closure(e2, ["x"])

    def test_enumeration(self, e2, isolated):
        """E2 has only the trivial sets; the isolated graph has four."""
        assert all_hereditary_saturated(e2) == [frozenset(), frozenset({"v", "w"})]
        assert len(all_hereditary_saturated(isolated)) == 4
        assert only_trivial_hs(e2)
        assert not only_trivial_hs(isolated)

    def test_enumeration_bound(self, isolated):
        """Enumeration is refused above the vertex bound."""
        with pytest.raises(BoundExceededError):
            all_hereditary_saturated(isolated, bound=1)

    def test_format(self):
        """Vertex sets print sorted."""
        assert format_vertex_set({"w", "v"}) == "{v,w}"
        assert format_vertex_set(set()) == "{}"


class TestSimplenessDecisions:
    """Test the congruence-simpleness decisions for graph algebras."""

    @pytest.mark.parametrize(
        "graph_name,simple,reason",
        [
            ("e2", True, "conditions(1,2,3)"),
            ("e4", True, "conditions(1,2,3)"),
            ("r1", False, "failed(3)"),
            ("r2", True, "conditions(1,2,3)"),
            ("romega", True, "conditions(1,2,3)"),
            ("isolated", False, "failed(2)"),
        ],
    )
    def test_steinberg_over_b(self, request, graph_name, simple, reason):
        """Verdicts over B for the shipped graphs."""
        graph = request.getfixturevalue(graph_name)
        verdict = steinberg_simple_decision(graph, instantiate_semiring("B"))
        assert verdict.simple is simple
        assert verdict.reason_code == reason

    def test_semiring_condition(self, r2):
        """N is neither a field nor B."""
        verdict = steinberg_simple_decision(r2, instantiate_semiring("N"))
        assert verdict.failed == (1,)

    def test_all_conditions_fail(self):
        """Failures accumulate."""
        g = Graph(["u", "v"], [EdgeRecord("e", "u", "u")])
        assert steinberg_simple_decision(g, instantiate_semiring("Z")).failed == (1, 2, 3)

    def test_field(self, r2):
        """Q is a field."""
        assert steinberg_simple_decision(r2, instantiate_semiring("Q")).simple

    def test_lpa_row_finite(self, r1):
        """The LPA decision agrees on row-finite graphs."""
        assert lpa_simple_decision(r1, instantiate_semiring("B")).failed == (3,)

    def test_lpa_out_of_scope(self, romega):
        """The LPA decision is not available with infinite emitters."""
        with pytest.raises(OutOfScopeError):
            lpa_simple_decision(romega, instantiate_semiring("B"))


class TestSinkPaths:
    """Test sink-path enumeration for acyclic graphs."""

    def test_e4(self, e4):
        """From v, both edges reach the sink w."""
        assert [str(p) for p in sink_paths_from(e4, "v")] == ["e", "f"]
        assert [str(p) for p in sink_paths_from(e4, "w")] == ["w"]
