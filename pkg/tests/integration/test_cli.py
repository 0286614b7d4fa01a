"""Integration tests for the steinberg command line."""

import pytest


class TestGraphVerbs:
    """Test analyze, closure and cycles end to end."""

    def test_analyze(self, run_cli, graph_file):
        """The two-petal rose is simple over B."""
        code, out, _ = run_cli("analyze", graph_file("R2"))
        assert code == 0
        assert out.startswith("# analysis of R2")
        assert "A_S(G_E) congruence-simple over B: YES" in out

    def test_analyze_machine(self, run_cli, graph_file):
        """Machine mode prints key=value lines only."""
        code, out, _ = run_cli("--format", "machine", "analyze", graph_file("R1"))
        assert code == 0
        assert "graph=R1 vertices=1 edges=1 bundles=0" in out.splitlines()
        assert all("=" in line for line in out.splitlines())

    def test_closure(self, run_cli, graph_file):
        """Closure of the sink in E2."""
        code, out, _ = run_cli("--format", "machine", "closure", graph_file("E2"), "w")
        assert code == 0
        assert "closure={v,w}" in out.splitlines()

    def test_hs_bound_flag(self, run_cli, graph_file):
        """--max-vertices switches off the H&S enumeration."""
        code, out, _ = run_cli(
            "--max-vertices", "1", "--format", "machine", "analyze", graph_file("E2")
        )
        assert code == 0
        assert "hs=skipped hs_trivial=true" in out.splitlines()

    def test_cycles(self, run_cli, graph_file):
        """The single loop of R1 has no exit."""
        code, out, _ = run_cli("--format", "machine", "cycles", graph_file("R1"))
        assert code == 0
        assert "cycle=e base=v exit=false" in out.splitlines()
        assert "condition_L=false" in out.splitlines()


class TestElementVerbs:
    """Test eq, eval and image end to end."""

    def test_eq_true(self, run_cli, graph_file):
        """The Cuntz-Krieger relation at the vertex of R2."""
        code, out, _ = run_cli("eq", graph_file("R2"), "v", "e.e* + f.f*")
        assert code == 0
        assert out.splitlines()[-1] == "true"

    def test_eq_false(self, run_cli, graph_file):
        """Different monomials are different."""
        code, out, _ = run_cli("--format", "machine", "eq", graph_file("R2"), "e", "f")
        assert code == 0
        assert out == "equal=false algebra=L_B(E)\n"

    def test_eq_out_of_scope(self, run_cli, graph_file):
        """LPA equality over an infinite emitter exits with 2."""
        code, out, err = run_cli("eq", graph_file("Romega"), "v", "v")
        assert code == 2
        assert out == ""
        assert err.startswith("out of scope:")

    def test_eval(self, run_cli, graph_file):
        """A Laurent polynomial evaluated at a loop."""
        code, out, _ = run_cli("--format", "machine", "eval", graph_file("R1"), "1 + x", "e")
        assert code == 0
        assert "term=v+e" in out.splitlines()

    def test_image(self, run_cli, graph_file):
        """The rose witness lies outside the image of π_E."""
        code, out, _ = run_cli(
            "--format", "machine", "image", graph_file("Romega"), "Z(v; v; ~es[0])"
        )
        assert code == 0
        assert "in_pi_image=false" in out.splitlines()


class TestErrors:
    """Test exit codes and messages for bad input."""

    def test_missing_graph_file(self, run_cli, tmp_path):
        """A missing file is an argument error."""
        code, _, err = run_cli("analyze", str(tmp_path / "missing.graph"))
        assert code == 1
        assert "does not exist" in err

    def test_malformed_graph_file(self, run_cli, tmp_path):
        """Syntax errors name the line."""
        path = tmp_path / "bad.graph"
        path.write_text("vertex v\nedge e v\n", encoding="utf-8")
        code, _, err = run_cli("analyze", str(path))
        assert code == 1
        assert "GraphSyntaxError" in err

    def test_bad_expression(self, run_cli, graph_file):
        """Expression syntax errors exit with 1."""
        code, _, err = run_cli("eq", graph_file("R2"), "e.", "v")
        assert code == 1
        assert "ExpressionSyntaxError" in err

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["verify", "nope"],
            ["demo", "nope"],
            ["--max-carrier", "0", "congruences", "B"],
        ],
    )
    def test_usage_errors(self, run_cli, argv):
        """Unknown verbs, suites, demos and bad flags exit with 1."""
        code, out, _ = run_cli(*argv)
        assert code == 1
        assert out == ""


class TestSuiteVerbs:
    """Test congruences, verify and demo end to end."""

    def test_congruences_builtin(self, run_cli):
        """M_2(B) is congruence-simple."""
        code, out, _ = run_cli("--format", "machine", "congruences", "M_2")
        assert code == 0
        assert "simple=true" in out.splitlines()
        assert "congruences=2" in out.splitlines()

    def test_congruences_file(self, run_cli, algebra_file):
        """Algebra table files are accepted."""
        code, out, _ = run_cli("--format", "machine", "congruences", algebra_file)
        assert code == 0
        assert "simple=false" in out.splitlines()

    def test_carrier_flag(self, run_cli):
        """--max-carrier makes M_2 too large."""
        code, _, err = run_cli("--max-carrier", "8", "congruences", "M_2")
        assert code == 1
        assert "BoundExceededError" in err

    def test_verify(self, run_cli):
        """The tropical suite passes."""
        code, out, _ = run_cli("--format", "machine", "verify", "tropical")
        assert code == 0
        assert out.splitlines()[-1] == "suite=tropical failures=0"

    def test_demo(self, run_cli):
        """The rose demo shows π_E is not surjective."""
        code, out, _ = run_cli("demo", "rose-omega")
        assert code == 0
        assert "L_B(E) ≅ A_B(G_E): no" in out
