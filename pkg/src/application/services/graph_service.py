"""Graph application service: the analyze, closure and cycles verbs."""

import logging
from typing import Optional

from ...domain.entities.graph import Graph
from ...domain.exceptions.algebra_exceptions import BoundExceededError
from ...domain.exceptions.element_exceptions import OutOfScopeError
from ...domain.services.finite_algebras import instantiate_semiring
from ...domain.services.graph_analysis import (
    all_hereditary_saturated,
    classify_vertex,
    condition_L,
    cycle_has_exit,
    enumerate_cycles,
    format_vertex_set,
    hs_closure,
    is_hereditary,
    is_saturated,
    lpa_simple_decision,
    only_trivial_hs,
    steinberg_simple_decision,
)
from ...domain.value_objects.verdicts import SimplenessVerdict
from ...infrastructure.config import Config
from ...infrastructure.serialization import load_graph
from ..commands.graph_commands import AnalyzeCommand, ClosureCommand, CyclesCommand
from ..dto.report import Report

logger = logging.getLogger(__name__)

CRITERION = (
    "criterion: simple iff (1) S is a field or B, (2) the only hereditary and saturated "
    "subsets of E0 are the empty set and E0, (3) every cycle in E has an exit"
)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _yes_no(value: bool) -> str:
    return "YES" if value else "NO"


def _verdict_entry(
    report: Report,
    what: str,
    semiring: str,
    verdict: SimplenessVerdict,
    label: Optional[str] = None,
) -> None:
    text = f"{what} over {label or semiring}: {_yes_no(verdict.simple)}"
    if not verdict.simple:
        failed = ", ".join(f"({i})" for i in verdict.failed)
        text += f" (failed {failed}: {'; '.join(verdict.reasons)})"
    report.add(
        text,
        {
            "algebra": what.split()[0],
            "semiring": semiring,
            "simple": _flag(verdict.simple),
            "reason": verdict.reason_code,
        },
    )


class GraphService:
    """Application service for the structural questions about one graph.

    Loads the graph file, runs the graph-analysis domain services and
    collects the answers into a Report.
    """

    def __init__(self, config: Config):
        """Initialize the graph service.

        Args:
            config: Bounds for the exhaustive enumerations.
        """
        self._config = config

    def analyze(self, command: AnalyzeCommand) -> Report:
        """Vertex classes, cycles, Condition (L), H&S subsets and simpleness verdicts.

        Args:
            command: Names the graph file.

        Returns:
            Report: One entry per fact.
        """
        g = load_graph(command.graph_path)
        logger.info(f"analyzing {g!r}")
        report = Report(f"analysis of {g.name}")
        report.add(
            f"graph {g.name}: {len(g.vertices)} vertices, {len(g.edges)} edges, "
            f"{len(g.bundles)} bundles",
            {
                "graph": g.name,
                "vertices": str(len(g.vertices)),
                "edges": str(len(g.edges)),
                "bundles": str(len(g.bundles)),
            },
        )
        for v in g.sorted_vertices:
            kind = classify_vertex(g, v).value
            report.add(f"vertex {v}: {kind}", {"vertex": v, "class": kind})
        report.add(
            f"row-finite: {_yes_no(g.is_row_finite)}", {"row_finite": _flag(g.is_row_finite)}
        )
        report.extend(self._cycle_entries(g))
        self._hs_entries(g, report)
        report.add(CRITERION)
        for semiring, label in (("B", "B"), ("Q", "a field")):
            desc = instantiate_semiring(semiring)
            verdict = steinberg_simple_decision(g, desc)
            _verdict_entry(report, "A_S(G_E) congruence-simple", semiring, verdict, label)
        try:
            verdict = lpa_simple_decision(g, instantiate_semiring("B"))
            _verdict_entry(report, "L_S(E) congruence-simple", "B", verdict)
        except OutOfScopeError:
            report.add(
                "L_S(E) congruence-simple over B: undecided "
                "(infinite emitters; open for the Boolean semifield)",
                {"algebra": "L_S(E)", "semiring": "B", "simple": "undecided"},
            )
        return report

    def closure(self, command: ClosureCommand) -> Report:
        """The least hereditary saturated set containing the given vertices."""
        g = load_graph(command.graph_path)
        seed = list(command.vertices)
        closure = hs_closure(g, seed)
        report = Report(f"hereditary saturated closure in {g.name}")
        report.add(
            f"seed {format_vertex_set(seed)}: hereditary {_yes_no(is_hereditary(g, seed))}, "
            f"saturated {_yes_no(is_saturated(g, seed))}",
            {
                "seed": format_vertex_set(seed),
                "hereditary": _flag(is_hereditary(g, seed)),
                "saturated": _flag(is_saturated(g, seed)),
            },
        )
        closed = format_vertex_set(closure)
        report.add(f"closure: {closed}", {"closure": closed})
        return report

    def cycles(self, command: CyclesCommand) -> Report:
        g = load_graph(command.graph_path)
        return self._cycle_entries(g, Report(f"cycles of {g.name}"))

    def _cycle_entries(self, g: Graph, report: Optional[Report] = None) -> Report:
        report = report if report is not None else Report("cycles")
        cycles = enumerate_cycles(g)
        report.add(f"cycles: {len(cycles)}", {"cycles": str(len(cycles))})
        for c in cycles:
            has_exit = cycle_has_exit(g, c)
            text = f"cycle {c.path} at {c.base}: exit {_yes_no(has_exit)}"
            fields = {"cycle": str(c.path), "base": c.base, "exit": _flag(has_exit)}
            if c.parallel_family:
                text += " (stands for infinitely many parallel cycles)"
                fields["parallel"] = "infinite"
            report.add(text, fields)
        holds = condition_L(g)
        report.add(f"Condition (L): {'holds' if holds else 'fails'}", {"condition_L": _flag(holds)})
        return report

    def _hs_entries(self, g: Graph, report: Report) -> None:
        try:
            subsets = all_hereditary_saturated(g, self._config.MAX_VERTICES)
        except BoundExceededError as exc:
            logger.warning(f"skipping H&S enumeration: {exc}")
            trivial = only_trivial_hs(g)
            report.add(
                f"hereditary saturated subsets: not enumerated ({len(g.vertices)} vertices); "
                f"only trivial: {_yes_no(trivial)}",
                {"hs": "skipped", "hs_trivial": _flag(trivial)},
            )
            return
        listed = ",".join(format_vertex_set(s) for s in subsets)
        report.add(
            f"hereditary saturated subsets: {', '.join(format_vertex_set(s) for s in subsets)}",
            {"hs": listed},
        )
        trivial = len(subsets) <= 2
        report.add(
            f"only trivial hereditary saturated subsets: {_yes_no(trivial)}",
            {"hs_trivial": _flag(trivial)},
        )
