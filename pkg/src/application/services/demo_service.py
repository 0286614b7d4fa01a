"""Demo application service: worked examples printed by the demo verb."""

import logging

from ...domain.entities.groupoid import chain_semilattice
from ...domain.exceptions.algebra_exceptions import PreconditionError
from ...domain.exceptions.element_exceptions import OutOfScopeError
from ...domain.services import cylinder_calculus as cc
from ...domain.services.congruences import check_congruence_axioms
from ...domain.services.finite_algebras import (
    function_algebra,
    instantiate_semiring,
    tropical_sample,
    tropical_support_relation,
)
from ...domain.services.graph_analysis import lpa_simple_decision, steinberg_simple_decision
from ...domain.services.groupoids import (
    semilattice_check_noniso,
    semilattice_groupoid,
    steinberg_finite,
)
from ...domain.value_objects.paths import EdgeRef, Path
from ...infrastructure.config import Config
from ..commands.suite_commands import DEMOS, DemoCommand
from ..dto.report import Report
from .catalog import shipped_graph

logger = logging.getLogger(__name__)


class DemoService:
    """Application service for the worked examples."""

    def __init__(self, config: Config):
        self._config = config

    def run(self, command: DemoCommand) -> Report:
        """Run the named demo.

        Raises:
            PreconditionError: For an unknown demo name.
        """
        demos = {
            "rose-omega": self.rose_omega_demo,
            "tropical": self.tropical_demo,
            "semilattice": self.semilattice_demo,
        }
        if command.name not in demos:
            raise PreconditionError(
                f"unknown demo '{command.name}' (expected one of {', '.join(DEMOS)})"
            )
        return demos[command.name]()

    def rose_omega_demo(self) -> Report:
        """The infinite rose: π_E misses Z(v; v; ~es[0]) although A_B(G_E) is simple."""
        g = shipped_graph("Romega")
        v = Path.vertex("v")
        report = Report("the rose with infinitely many petals")
        report.add("graph: one vertex v with loops es[0], es[1], ... (v is an infinite emitter)")
        vertex = cc.vertex_indicator(g, "v")
        report.add(
            f"π_E(v) = {vertex} is in the image: {'yes' if cc.in_pi_image(vertex) else 'no'}",
            {"vertex_in_image": "true" if cc.in_pi_image(vertex) else "false"},
        )
        witness = cc.pair_indicator(g, v, v, [EdgeRef("es", 0)])
        reached = cc.in_pi_image(witness)
        report.add(
            f"{witness} is in the image: {'yes' if reached else 'no'}",
            {"witness_in_image": "true" if reached else "false"},
        )
        if not reached:
            report.add(
                f"π_E not surjective; witness {witness}",
                {"pi_surjective": "false", "witness": str(witness).replace(" ", "")},
            )
        report.add(
            "Z(v; v; ~es[0]) = Z(v; v) minus Z(es[0]; es[0]) contains the point v itself, "
            "which no finite union of cylinders Z(p; q) can single out"
        )
        report.add(
            "L_B(E) is a free B-semimodule with basis the monomials p q*, so it has no element "
            "mapping to this indicator"
        )
        report.add("L_B(E) ≅ A_B(G_E): no", {"isomorphic": "false"})
        verdict = steinberg_simple_decision(g, instantiate_semiring("B"))
        report.add(
            f"A_B(G_E) congruence-simple: {'yes' if verdict.simple else 'no'} "
            "(only trivial hereditary saturated subsets, and every cycle has an exit)",
            {
                "steinberg_simple": "true" if verdict.simple else "false",
                "reason": verdict.reason_code,
            },
        )
        try:
            lpa_simple_decision(g, instantiate_semiring("B"))
        except OutOfScopeError:
            report.add(
                "L_B(E) congruence-simple: open question (the row-finite criterion does not apply)",
                {"lpa_simple": "open"},
            )
        return report

    def tropical_demo(self) -> Report:
        """The tropical semifield is not congruence-simple."""
        t = instantiate_semiring("T")
        sample = tropical_sample(50, self._config.SEED)
        report = Report("a proper congruence of the tropical semifield")
        report.add("T = (Q ∪ {-inf}, max, +) is a semifield: every nonzero element is invertible")
        report.add(
            "ρ relates x and y when x = y or x · y ≠ -inf, i.e. it glues all finite numbers"
        )
        check = check_congruence_axioms(t, tropical_support_relation, sample)
        report.add(
            f"congruence check on {len(sample)} sampled elements: {check.describe()}",
            {"sample": str(len(sample)), "violation": "none" if check.ok else "found"},
        )
        finite = [x for x in sample if not x.is_neg_inf]
        report.add(
            f"{finite[0]} ρ {finite[1]} but not -inf ρ {finite[0]}: ρ is proper and nontrivial"
        )
        report.add("T congruence-simple: no", {"simple": "false"})
        return report

    def semilattice_demo(self) -> Report:
        """B[E] and A_B(G_E) ≅ B^E differ for every semilattice with more than one element."""
        e = chain_semilattice(2)
        report = Report("semigroup algebra versus Steinberg algebra of a semilattice")
        identified = steinberg_finite(semilattice_groupoid(e)).same_tables(function_algebra(e.size))
        report.add(
            f"A_B(G_E) = B^E for the 2-chain: {'yes' if identified else 'no'}",
            {"steinberg_is_function_algebra": "true" if identified else "false"},
        )
        search = semilattice_check_noniso(e, self._config.MAX_SEMILATTICE)
        report.add(
            f"B[E] ≅ B^E: {'yes' if search.isomorphic else 'no'} "
            f"({search.examined} bijections examined)",
            {
                "isomorphic": "true" if search.isomorphic else "false",
                "examined": str(search.examined),
            },
        )
        report.add(
            "B[E] is not A_B(G_E): the semigroup isomorphism needs subtraction, which B lacks"
        )
        return report
