"""Unit tests for the application services.

Graph files are written to a temporary directory or, where only the
orchestration matters, the loader is patched to return a shipped graph.
"""

from unittest.mock import patch

import pytest

from src.application.commands.graph_commands import (
    AnalyzeCommand,
    ClosureCommand,
    CyclesCommand,
    EqCommand,
    EvalCommand,
    ImageCommand,
)
from src.application.commands.suite_commands import CongruencesCommand, DemoCommand, VerifyCommand
from src.application.dto.report import Report
from src.application.services import (
    CongruenceService,
    DemoService,
    ElementService,
    GraphService,
    VerificationService,
)
from src.application.services.catalog import builtin_algebra, shipped_graph
from src.domain.exceptions import (
    BoundExceededError,
    GraphShapeError,
    OutOfScopeError,
    PreconditionError,
    ZeroHemiringError,
)
from src.domain.services.groupoids import graph_groupoid_finite, is_minimal
from src.domain.services.sampling import acyclic_graphs
from src.infrastructure.config import Config
from src.infrastructure.serialization import write_algebra


@pytest.fixture
def light_config():
    """Configuration with small trial counts."""
    return Config(PROPERTY_TRIALS=10, LAW_TRIALS=10, PI_TRIALS=10)


class TestReport:
    """Test the Report DTO."""

    def test_value_of(self):
        """The first value recorded under a key wins."""
        report = Report("r").add("a", {"k": "1"}).add("b", {"k": "2"})
        assert report.value_of("k") == "1"
        assert report.value_of("missing") is None

    def test_extend_keeps_worst_exit_code(self):
        """Merged reports keep the larger exit code."""
        failed = Report("f", exit_code=1).add("x")
        merged = Report("r").extend(failed)
        assert merged.exit_code == 1
        assert len(merged.entries) == 1


class TestCatalog:
    """Test the built-in algebra names."""

    @pytest.mark.parametrize(
        "name,size",
        [
            ("B", 2),
            ("B^3", 8),
            ("M_2", 16),
            ("M_2(B)", 16),
            ("B[Z_2]", 4),
            ("B[C_2]", 4),
            ("pair_2", 16),
            ("Z_3", 8),
        ],
    )
    def test_sizes(self, config, name, size):
        """Each name resolves to an algebra of the expected size."""
        assert builtin_algebra(name, config).size == size

    def test_file(self, config, tmp_path, b2_alg):
        """Paths to table files are read."""
        path = tmp_path / "b2.alg"
        path.write_text(write_algebra(b2_alg))
        assert builtin_algebra(str(path), config).same_tables(b2_alg)

    def test_unknown(self, config):
        """Unknown names are rejected."""
        with pytest.raises(PreconditionError):
            builtin_algebra("Q_7", config)


class TestGraphService:
    """Test the analyze, closure and cycles verbs."""

    def test_analyze_r2(self, config, graph_file):
        """R2 is simple over B and a field; L_B(E) too."""
        report = GraphService(config).analyze(AnalyzeCommand(graph_file("R2")))
        texts = [entry.text for entry in report.entries]
        assert report.value_of("graph") == "R2"
        assert report.value_of("class") == "regular"
        assert report.value_of("condition_L") == "true"
        assert "A_S(G_E) congruence-simple over B: YES" in texts
        assert "A_S(G_E) congruence-simple over a field: YES" in texts
        assert "L_S(E) congruence-simple over B: YES" in texts

    def test_analyze_e2(self, config, graph_file):
        """Only the trivial H&S subsets in E2."""
        report = GraphService(config).analyze(AnalyzeCommand(graph_file("E2")))
        assert report.value_of("hs") == "{},{v,w}"
        assert report.value_of("hs_trivial") == "true"

    def test_analyze_r1(self, config, graph_file):
        """R1 fails Condition (L)."""
        report = GraphService(config).analyze(AnalyzeCommand(graph_file("R1")))
        assert report.value_of("simple") == "false"
        assert report.value_of("reason") == "failed(3)"
        assert report.value_of("exit") == "false"

    def test_analyze_romega(self, config):
        """The LPA verdict is undecided with an infinite emitter."""
        with patch(
            "src.application.services.graph_service.load_graph",
            return_value=shipped_graph("Romega"),
        ):
            report = GraphService(config).analyze(AnalyzeCommand("Romega.graph"))
        simple = [e.fields["simple"] for e in report.entries if "simple" in e.fields]
        assert simple == ["true", "true", "undecided"]
        assert report.value_of("parallel") == "infinite"

    def test_hs_enumeration_skipped(self, graph_file):
        """Above the vertex bound only the triviality check runs."""
        report = GraphService(Config(MAX_VERTICES=1)).analyze(AnalyzeCommand(graph_file("E2")))
        assert report.value_of("hs") == "skipped"
        assert report.value_of("hs_trivial") == "true"

    def test_closure(self, config, graph_file):
        """The closure of {w} in E2 is everything."""
        report = GraphService(config).closure(ClosureCommand(graph_file("E2"), ["w"]))
        assert report.value_of("seed") == "{w}"
        assert report.value_of("hereditary") == "true"
        assert report.value_of("saturated") == "false"
        assert report.value_of("closure") == "{v,w}"

    def test_cycles(self, config, graph_file):
        """R2 lists two cycles."""
        report = GraphService(config).cycles(CyclesCommand(graph_file("R2")))
        assert report.value_of("cycles") == "2"
        assert [e.fields["cycle"] for e in report.entries if "cycle" in e.fields] == ["e", "f"]


class TestElementService:
    """Test the eq, eval and image verbs."""

    def test_eq_in_lpa(self, config, graph_file):
        """ee* + ff* = v in L_B(R2)."""
        report = ElementService(config).eq(EqCommand(graph_file("R2"), "v", "e.e* + f.f*"))
        assert report.value_of("equal") == "true"
        assert report.value_of("algebra") == "L_B(E)"

    def test_eq_in_steinberg_algebra(self, config, graph_file):
        """A cylinder literal moves the comparison to A_B(G_E)."""
        report = ElementService(config).eq(
            EqCommand(graph_file("Romega"), "v", "Z(v;v;~es[0]) + es[0].es[0]*")
        )
        assert report.value_of("equal") == "true"
        assert report.value_of("algebra") == "A_B(G_E)"

    def test_eq_out_of_scope(self, config, graph_file):
        """Two LPA expressions over Romega are not compared."""
        with pytest.raises(OutOfScopeError):
            ElementService(config).eq(EqCommand(graph_file("Romega"), "v", "v"))

    def test_eval(self, config, graph_file):
        """1 + x at the loop of R1."""
        report = ElementService(config).eval(EvalCommand(graph_file("R1"), "1 + x", "e"))
        assert report.value_of("term") == "v+e"
        assert report.value_of("image") is not None

    def test_eval_needs_a_cycle(self, config, graph_file):
        """The edge of E2 is not a cycle."""
        with pytest.raises(GraphShapeError):
            ElementService(config).eval(EvalCommand(graph_file("E2"), "x", "e"))

    def test_image(self, config, graph_file):
        """The witness in Romega is not reached by π_E."""
        report = ElementService(config).image(ImageCommand(graph_file("Romega"), "Z(v;v;~es[0])"))
        assert report.value_of("element") == "Z(v;v;~es[0])"
        assert report.value_of("in_pi_image") == "false"
        assert report.value_of("degrees") == "0"

    def test_image_of_lpa_term(self, config, graph_file):
        """LPA expressions report the term and its image."""
        report = ElementService(config).image(ImageCommand(graph_file("R2"), "e + f*"))
        assert report.value_of("term") == "f*+e"
        assert report.value_of("in_pi_image") == "true"
        assert report.value_of("degrees") == "-1,1"


class TestCongruenceService:
    """Test the congruences verb."""

    def test_matrix_semiring(self, config):
        """M_2(B) is simple with two congruences."""
        report = CongruenceService(config).explore(CongruencesCommand("M_2"))
        assert report.value_of("size") == "16"
        assert report.value_of("axioms_ok") == "true"
        assert report.value_of("natural_order_ok") == "true"
        assert report.value_of("simple") == "true"
        assert report.value_of("congruences") == "2"
        assert report.value_of("witness") is None

    def test_product(self, config):
        """B^2 is not simple and shows a witness."""
        report = CongruenceService(config).explore(CongruencesCommand("B^2"))
        assert report.value_of("simple") == "false"
        assert report.value_of("congruences") == "4"
        assert report.value_of("witness") is not None

    def test_lattice_skipped(self):
        """Large algebras skip the lattice enumeration."""
        report = CongruenceService(Config(MAX_CONGRUENCE_LATTICE_CARRIER=8)).explore(
            CongruencesCommand("M_2")
        )
        assert report.value_of("congruences") == "skipped"

    def test_carrier_bound(self):
        """The carrier bound applies to built-ins."""
        with pytest.raises(BoundExceededError):
            CongruenceService(Config(MAX_CARRIER=8)).explore(CongruencesCommand("M_2"))

    def test_zero_hemiring(self, config, tmp_path):
        """A one-element algebra is rejected."""
        path = tmp_path / "zero.alg"
        path.write_text("algebra 0 size=1\nadd\n0\nmul\n0\nzero=0\n")
        with pytest.raises(ZeroHemiringError):
            CongruenceService(config).explore(CongruencesCommand(str(path)))


class TestDemoService:
    """Test the worked examples."""

    def test_rose_omega(self, config):
        """π_E misses a point of A_B(G_E) while the algebra stays simple."""
        report = DemoService(config).run(DemoCommand("rose-omega"))
        assert report.value_of("vertex_in_image") == "true"
        assert report.value_of("witness_in_image") == "false"
        assert report.value_of("pi_surjective") == "false"
        assert report.value_of("isomorphic") == "false"
        assert report.value_of("steinberg_simple") == "true"
        assert report.value_of("lpa_simple") == "open"

    def test_tropical(self, config):
        """T is not congruence-simple."""
        report = DemoService(config).run(DemoCommand("tropical"))
        assert report.value_of("violation") == "none"
        assert report.value_of("simple") == "false"

    def test_semilattice(self, config):
        """B[E] and B^E differ for the 2-chain."""
        report = DemoService(config).run(DemoCommand("semilattice"))
        assert report.value_of("steinberg_is_function_algebra") == "true"
        assert report.value_of("isomorphic") == "false"
        assert report.value_of("examined") == "24"

    def test_unknown(self, config):
        """Unknown demo names are rejected."""
        with pytest.raises(PreconditionError):
            DemoService(config).run(DemoCommand("nope"))


class TestVerificationService:
    """Test the verify suites."""

    @pytest.mark.parametrize("suite", ["tropical", "lpa", "pi"])
    def test_light_suites_pass(self, light_config, suite):
        """Each suite runs clean and reports a summary."""
        report = VerificationService(light_config).run(VerifyCommand(suite))
        assert report.exit_code == 0
        assert report.entries[-1].fields == {"suite": suite, "failures": "0"}
        assert all(e.fields["ok"] == "true" for e in report.entries if "ok" in e.fields)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "suite",
        [
            "groupoids",
            "matrices",
            "semilattice",
            "graphs",
            "oracle",
            "ideals",
            "laws",
            "confluence",
        ],
    )
    def test_exhaustive_suites_pass(self, light_config, suite):
        """The exhaustive suites run clean."""
        assert VerificationService(light_config).run(VerifyCommand(suite)).exit_code == 0

    @pytest.mark.slow
    def test_graphs_suite_reaches_multi_orbit_graphs(self, light_config):
        """Multi-orbit graphs are decided per orbit; only single orbits past M_3(B) remain."""
        report = VerificationService(light_config).run(VerifyCommand("graphs"))
        assert report.exit_code == 0
        checked = {e.fields["check"] for e in report.entries if "check" in e.fields}
        family = {g.name: g for g in acyclic_graphs(3, 3)}
        assert "acyclic3:3:01,01,02_decision_vs_brute_force" in checked
        left = [name for name in family if f"{name}_decision_vs_brute_force" not in checked]
        assert "acyclic2:3:01,01,01" in left
        for name in left:
            groupoid = graph_groupoid_finite(family[name])
            assert is_minimal(groupoid) and groupoid.size >= 16

    def test_failure_sets_exit_code(self, light_config):
        """A failing check makes the exit code 1."""
        service = VerificationService(light_config)
        service._suites["tropical"] = lambda r: r.check("always fails", False, "forced")
        report = service.run(VerifyCommand("tropical"))
        assert report.exit_code == 1
        assert report.value_of("failures") == "1"

    def test_unknown_suite(self, light_config):
        """Unknown suite names are rejected."""
        with pytest.raises(PreconditionError):
            VerificationService(light_config).run(VerifyCommand("nope"))
