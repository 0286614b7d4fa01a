"""Unit tests for finite groupoids and their Steinberg algebras."""

import pytest

from src.domain.entities.groupoid import (
    FiniteGroupoid,
    Semilattice,
    chain_semilattice,
    cyclic_group,
)
from src.domain.exceptions import (
    AxiomViolationError,
    BoundExceededError,
    GraphShapeError,
    PreconditionError,
)
from src.domain.services.finite_algebras import function_algebra, group_semiring, matrix_semiring
from src.domain.services.groupoids import (
    GroupSpec,
    PairSpec,
    UnionSpec,
    build_groupoid,
    graph_groupoid_finite,
    group_alignment,
    involution_check,
    is_effective,
    is_isomorphism,
    is_minimal,
    isotropy,
    orbit_restriction_check,
    orbit_subgroupoid,
    orbits,
    pair_matrix_alignment,
    semilattice_check_noniso,
    semilattice_groupoid,
    steinberg_finite,
    subset_bijection,
    validate_groupoid,
    verify_simpleness_theorem,
)
from src.infrastructure.config import Config, set_config
from src.infrastructure.serialization.graph_format import parse_graph


@pytest.fixture
def pair2():
    return build_groupoid(PairSpec(2))


class TestBuildGroupoid:
    """Test the groupoid constructors."""

    def test_pair_groupoid(self, pair2):
        """Units come first, then the other arrows by label."""
        assert pair2.labels == ("(x1,x1)", "(x2,x2)", "(x1,x2)", "(x2,x1)")
        assert pair2.units == (0, 1)
        assert validate_groupoid(pair2).ok

    def test_composition(self, pair2):
        """(x1,x2)(x2,x1) = (x1,x1); (x1,x2)(x1,x2) is undefined."""
        a = pair2.index_of("(x1,x2)")
        b = pair2.index_of("(x2,x1)")
        assert pair2.compose(a, b) == pair2.index_of("(x1,x1)")
        assert pair2.compose(a, a) is None

    def test_group(self):
        """A group is a groupoid with one unit."""
        g = build_groupoid(GroupSpec(cyclic_group(3)))
        assert g.units == (0,)
        assert validate_groupoid(g).ok

    def test_union(self):
        """Parts of a union are prefixed and never compose."""
        g = build_groupoid(UnionSpec((PairSpec(1), PairSpec(1))))
        assert g.labels == ("0.(x1,x1)", "1.(x1,x1)")
        assert g.compose(0, 1) is None
        assert validate_groupoid(g).ok

    def test_empty_inputs(self):
        """Empty pair groupoids and unions are refused."""
        with pytest.raises(PreconditionError):
            build_groupoid(PairSpec(0))
        with pytest.raises(PreconditionError):
            build_groupoid(UnionSpec(()))

    def test_morphism_bound(self):
        """The pair groupoid on 3 points has 9 morphisms."""
        with pytest.raises(BoundExceededError):
            build_groupoid(PairSpec(3), bound=8)

    def test_broken_inverse(self):
        """A non-invertible arrow is reported by label."""
        g = FiniteGroupoid(
            labels=["u", "a"],
            source=[0, 0],
            range_=[0, 0],
            inverse=[0, 1],
            compose=[[0, 1], [1, 1]],
            units=[0],
        )
        report = validate_groupoid(g)
        assert report.violation == "inverse law at a"

    def test_bad_semilattice(self):
        """Meet tables must be idempotent."""
        with pytest.raises(AxiomViolationError):
            Semilattice(["a", "b"], [[1, 1], [1, 1]])


class TestStructure:
    """Test orbits, isotropy, minimality and effectiveness."""

    def test_pair_groupoid(self, pair2):
        """The pair groupoid is transitive and principal."""
        assert orbits(pair2) == [frozenset({0, 1})]
        assert isotropy(pair2) == [0, 1]
        assert is_minimal(pair2)
        assert is_effective(pair2)

    def test_group_is_not_effective(self):
        """A nontrivial group has nontrivial isotropy."""
        g = build_groupoid(GroupSpec(cyclic_group(2)))
        assert is_minimal(g)
        assert not is_effective(g)

    def test_union_is_not_minimal(self):
        """Two parts give two orbits."""
        g = build_groupoid(UnionSpec((PairSpec(1), PairSpec(2))))
        assert len(orbits(g)) == 2
        assert not is_minimal(g)


class TestSteinbergFinite:
    """Test A_B(G) for finite discrete groupoids."""

    def test_pair_groupoid_is_matrix_semiring(self, pair2):
        """A_B(X × X) ≅ M_2(B) through (x_i, x_j) ↦ E_ij."""
        alg = steinberg_finite(pair2)
        phi = subset_bijection(pair_matrix_alignment(pair2, 2))
        assert alg.size == 16
        assert alg.one == 0b0011
        assert is_isomorphism(alg, matrix_semiring(2), phi)

    def test_group_is_group_semiring(self):
        """A_B(G) ≅ B[G] for a group."""
        group = cyclic_group(3)
        g = build_groupoid(GroupSpec(group))
        phi = subset_bijection(group_alignment(g, group))
        assert is_isomorphism(steinberg_finite(g), group_semiring(group), phi)

    def test_local_units(self, pair2):
        """Subsets of the unit space are local units."""
        assert steinberg_finite(pair2).local_units == frozenset({0, 1, 2, 3})

    def test_involution(self, pair2):
        """U ↦ U⁻¹ is an anti-automorphism."""
        assert involution_check(steinberg_finite(pair2), pair2).ok

    def test_morphism_bound(self):
        """2^16 subsets are out of reach by default."""
        with pytest.raises(BoundExceededError):
            steinberg_finite(build_groupoid(PairSpec(4)))

    def test_caller_bound_sets_morphism_limit(self, pair2):
        """An explicit carrier bound overrides the configured morphism limit both ways."""
        set_config(Config(MAX_STEINBERG_MORPHISMS=2))
        with pytest.raises(BoundExceededError):
            steinberg_finite(pair2)
        assert steinberg_finite(pair2, bound=16).size == 16
        set_config(None)
        with pytest.raises(BoundExceededError):
            steinberg_finite(pair2, bound=8)

    @pytest.mark.parametrize(
        "spec,simple",
        [
            (PairSpec(1), True),
            (PairSpec(2), True),
            (GroupSpec(cyclic_group(2)), False),
            (UnionSpec((PairSpec(1), PairSpec(1))), False),
        ],
    )
    def test_simpleness_criterion(self, spec, simple):
        """Brute force agrees with minimal and effective."""
        check = verify_simpleness_theorem(build_groupoid(spec))
        assert check.agree
        assert check.lhs is simple


class TestGraphGroupoid:
    """Test the graph groupoid of finite acyclic graphs."""

    def test_e2(self, e2):
        """E2 has the pair groupoid on its two boundary paths w and e."""
        g = graph_groupoid_finite(e2)
        assert set(g.labels) == {"(e,0,e)", "(w,0,w)", "(e,1,w)", "(w,-1,e)"}
        assert len(g.units) == 2
        assert validate_groupoid(g).ok
        assert verify_simpleness_theorem(g).lhs

    def test_e4(self, e4):
        """E4 has three boundary paths ending at w."""
        g = graph_groupoid_finite(e4)
        assert g.size == 9
        assert is_minimal(g) and is_effective(g)

    def test_isolated(self, isolated):
        """Two sinks give two orbits."""
        assert not is_minimal(graph_groupoid_finite(isolated))

    @pytest.mark.parametrize("graph_name", ["r1", "romega"])
    def test_infinite_unit_space(self, request, graph_name):
        """Cycles and bundles leave the finite setting."""
        with pytest.raises(GraphShapeError, match="cylinder-calculus"):
            graph_groupoid_finite(request.getfixturevalue(graph_name))


class TestOrbitReduction:
    """Test orbit reductions of graph groupoids past the carrier bound."""

    @pytest.fixture
    def two_sinks(self):
        """Sink v1 receives two parallel edges, sink v2 one edge: 3² + 2² morphisms."""
        graph = parse_graph(
            "vertex v0\nvertex v1\nvertex v2\nedge a v0 v1\nedge b v0 v1\nedge c v0 v2\n",
            name="two-sinks",
        )
        return graph_groupoid_finite(graph)

    def test_orbits(self, two_sinks):
        """One orbit of boundary paths per sink."""
        assert two_sinks.size == 13
        assert sorted(len(orbit) for orbit in orbits(two_sinks)) == [2, 3]

    def test_reductions_are_pair_groupoids(self, two_sinks):
        """Each reduction is minimal, effective and has n² morphisms."""
        for orbit in orbits(two_sinks):
            reduction = orbit_subgroupoid(two_sinks, orbit)
            assert validate_groupoid(reduction).ok
            assert reduction.size == len(orbit) ** 2
            assert is_minimal(reduction) and is_effective(reduction)

    def test_restriction_is_proper_congruence(self, two_sinks):
        """Restricting to either orbit respects products and has a proper kernel."""
        for orbit in orbits(two_sinks):
            report = orbit_restriction_check(two_sinks, orbit)
            assert report.ok
            assert report.examined > 0

    def test_single_orbit_restriction_is_diagonal(self, pair2):
        """A minimal groupoid has no proper restriction."""
        report = orbit_restriction_check(pair2, orbits(pair2)[0])
        assert not report.ok
        assert "diagonal" in report.violation

    def test_not_an_orbit(self, two_sinks):
        """Only orbits can be reduced to."""
        with pytest.raises(PreconditionError):
            orbit_subgroupoid(two_sinks, frozenset({0}))


class TestSemilattices:
    """Test B[E] against A_B(G_E) for semilattices."""

    def test_steinberg_algebra_is_function_algebra(self):
        """The unit-only groupoid gives B^E."""
        e = chain_semilattice(2)
        assert steinberg_finite(semilattice_groupoid(e)).same_tables(function_algebra(2))

    def test_two_chain(self):
        """All 4! bijections are examined and none is an isomorphism."""
        search = semilattice_check_noniso(chain_semilattice(2))
        assert not search.isomorphic
        assert search.examined == 24

    def test_trivial_semilattice(self):
        """One point is excluded."""
        with pytest.raises(PreconditionError):
            semilattice_check_noniso(chain_semilattice(1))

    def test_bound(self):
        """The 4-chain needs 16! bijections."""
        with pytest.raises(BoundExceededError):
            semilattice_check_noniso(chain_semilattice(4))
