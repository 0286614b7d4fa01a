"""Unit tests for the finite groupoid oracle."""

import pytest

from src.domain.exceptions import GraphShapeError
from src.domain.services import cylinder_calculus as cc
from src.domain.services.groupoids import graph_groupoid_finite, steinberg_finite
from src.domain.services.oracle import oracle_mask, to_finite_oracle
from src.domain.value_objects.paths import EdgeRef


class TestOracle:
    """Test the expansion of cylinder elements into morphism sets."""

    def test_vertex(self, e2):
        """Z(v; v) in E2 contains only the boundary path e."""
        groupoid = graph_groupoid_finite(e2)
        indices = to_finite_oracle(e2, cc.vertex_indicator(e2, "v"), groupoid)
        assert indices == frozenset({groupoid.index_of("(e,0,e)")})

    def test_unit(self, e2):
        """The unit of A_B(G_E) is the unit space."""
        groupoid = graph_groupoid_finite(e2)
        alg = steinberg_finite(groupoid)
        assert oracle_mask(to_finite_oracle(e2, cc.unit_element(e2), groupoid)) == alg.one

    def test_products_agree(self, e4):
        """The oracle turns cylinder products into subset products."""
        groupoid = graph_groupoid_finite(e4)
        alg = steinberg_finite(groupoid, bound=1 << 9)
        a = cc.edge_indicator(e4, EdgeRef("e"))
        b = cc.ghost_indicator(e4, EdgeRef("f"))

        def mask(element):
            return oracle_mask(to_finite_oracle(e4, element, groupoid))

        assert mask(cc.mul(a, b)) == alg.mul(mask(a), mask(b))
        assert mask(cc.add(a, b)) == alg.add(mask(a), mask(b))

    def test_zero(self, e2):
        """Zero is the empty set."""
        assert to_finite_oracle(e2, cc.zero_element(e2)) == frozenset()

    def test_cyclic_graph(self, r1):
        """Cyclic graphs have no finite unit space."""
        with pytest.raises(GraphShapeError):
            to_finite_oracle(r1, cc.vertex_indicator(r1, "v"))

    def test_mask(self):
        """Indices become bits."""
        assert oracle_mask([0, 2]) == 5
        assert oracle_mask([]) == 0
