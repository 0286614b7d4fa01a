"""Unit tests for the Leavitt path algebra L_B(E)."""

import pytest

from src.domain.entities.graph import Cycle
from src.domain.exceptions import OutOfScopeError, RangeMismatchError
from src.domain.services import cylinder_calculus as cc
from src.domain.services.lpa import (
    check_defining_relations,
    cycle_power,
    eval_cycle_poly,
    graph_inverse_semigroup_mul,
    lpa_add,
    lpa_edge,
    lpa_equals,
    lpa_ghost,
    lpa_monomial,
    lpa_mul,
    lpa_star,
    lpa_sum,
    lpa_vertex,
    lpa_zero,
    pi_E,
)
from src.domain.value_objects.laurent import LaurentPolyB
from src.domain.value_objects.paths import EdgeRef, Path

E, F = EdgeRef("e"), EdgeRef("f")


class TestTerms:
    """Test term construction and printing."""

    def test_generators(self, r2):
        """Vertices, edges and ghosts print as themselves."""
        assert str(lpa_vertex(r2, "v")) == "v"
        assert str(lpa_edge(r2, E)) == "e"
        assert str(lpa_ghost(r2, E)) == "e*"
        assert str(lpa_zero(r2)) == "0"

    def test_addition_is_idempotent(self, r2):
        """x + x = x."""
        e = lpa_edge(r2, E)
        assert lpa_add(e, e) == e
        assert lpa_sum(r2, [e, lpa_ghost(r2, F), e]) == lpa_add(e, lpa_ghost(r2, F))

    def test_monomial_range(self, e2):
        """p q* needs r(p) = r(q)."""
        with pytest.raises(RangeMismatchError):
            lpa_monomial(e2, e2.edge_path(E), Path.vertex("v"))


class TestProducts:
    """Test the graph inverse semigroup product."""

    def test_ghost_times_edge(self, r2):
        """e*e = v and e*f = 0."""
        assert lpa_mul(lpa_ghost(r2, E), lpa_edge(r2, E)) == lpa_vertex(r2, "v")
        assert lpa_mul(lpa_ghost(r2, E), lpa_edge(r2, F)).is_zero

    def test_edge_times_ghost(self, r2):
        """ee* is a new monomial, not rewritten."""
        product = lpa_mul(lpa_edge(r2, E), lpa_ghost(r2, E))
        assert str(product) == "e.e*"
        assert product != lpa_vertex(r2, "v")

    def test_zero_absorbs(self, r2):
        """None stands for zero in G(E)."""
        assert graph_inverse_semigroup_mul(r2, None, (Path.vertex("v"), Path.vertex("v"))) is None

    def test_star(self, r2):
        """(e f*)* = f e*."""
        term = lpa_mul(lpa_edge(r2, E), lpa_ghost(r2, F))
        assert lpa_star(term) == lpa_mul(lpa_edge(r2, F), lpa_ghost(r2, E))


class TestEquality:
    """Test equality in L_B(E) through the injective map π_E."""

    def test_cuntz_krieger(self, r2):
        """ee* + ff* = v in the rose with two petals."""
        ck = lpa_add(
            lpa_mul(lpa_edge(r2, E), lpa_ghost(r2, E)),
            lpa_mul(lpa_edge(r2, F), lpa_ghost(r2, F)),
        )
        assert lpa_equals(ck, lpa_vertex(r2, "v"))
        assert not lpa_equals(lpa_mul(lpa_edge(r2, E), lpa_ghost(r2, E)), lpa_vertex(r2, "v"))

    def test_single_loop(self, r1):
        """ee* = v in R1."""
        assert lpa_equals(lpa_mul(lpa_edge(r1, E), lpa_ghost(r1, E)), lpa_vertex(r1, "v"))

    def test_not_row_finite(self, romega):
        """Equality is not decided when v is an infinite emitter."""
        v = lpa_vertex(romega, "v")
        with pytest.raises(OutOfScopeError):
            lpa_equals(v, v)

    def test_pi_e_on_generators(self, e2):
        """π_E sends generators to their indicators."""
        assert pi_E(lpa_vertex(e2, "v")) == cc.vertex_indicator(e2, "v")
        assert pi_E(lpa_edge(e2, E)) == cc.edge_indicator(e2, E)
        assert pi_E(lpa_ghost(e2, E)) == cc.ghost_indicator(e2, E)

    @pytest.mark.parametrize("graph_name", ["e2", "e4", "r1", "r2", "isolated"])
    def test_defining_relations(self, request, graph_name):
        """The generators satisfy every defining relation."""
        report = check_defining_relations(request.getfixturevalue(graph_name))
        assert report.ok
        assert report.examined > 0


class TestCyclePolynomials:
    """Test substitution of cycles into Laurent polynomials."""

    def test_powers(self, r1):
        """c^0 is the base vertex."""
        cycle = Cycle(r1.path("v", [E]))
        assert cycle_power(cycle, 0) == Path.vertex("v")
        assert str(cycle_power(cycle, 3)) == "e.e.e"

    def test_substitution(self, r1):
        """x^-1 + 1 + x^2 becomes e* + v + e.e."""
        cycle = Cycle(r1.path("v", [E]))
        term = eval_cycle_poly(r1, LaurentPolyB.of([-1, 0, 2]), cycle)
        assert str(term) == "v + e* + e.e"

    def test_distinct_polynomials_stay_distinct(self, r1):
        """Substitution into the exitless loop of R1 is injective."""
        cycle = Cycle(r1.path("v", [E]))
        one = eval_cycle_poly(r1, LaurentPolyB.of([0]), cycle)
        both = eval_cycle_poly(r1, LaurentPolyB.of([0, 1]), cycle)
        assert not lpa_equals(one, both)
