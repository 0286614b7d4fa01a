"""Congruence application service: the congruences verb."""

import logging

from ...domain.entities.finite_algebra import CongruenceRelation, FiniteAlgebra
from ...domain.exceptions.algebra_exceptions import BoundExceededError
from ...domain.services.congruences import all_congruences, is_congruence_simple
from ...domain.services.finite_algebras import natural_order_check, validate_algebra
from ...infrastructure.config import Config
from ..commands.suite_commands import CongruencesCommand
from ..dto.report import Report
from .catalog import builtin_algebra

logger = logging.getLogger(__name__)


def block_map(theta: CongruenceRelation) -> str:
    """Block representative of every carrier index, in index order."""
    return ",".join(str(b) for b in theta.blocks)


def _describe_blocks(alg: FiniteAlgebra, theta: CongruenceRelation) -> str:
    shown = [c for c in theta.classes() if len(c) > 1]
    return "; ".join("{" + ", ".join(alg.label(i) for i in c) + "}" for c in shown)


class CongruenceService:
    """Application service exploring the congruences of one finite algebra."""

    def __init__(self, config: Config):
        self._config = config

    def explore(self, command: CongruencesCommand) -> Report:
        """Simpleness verdict, congruence count and a witness congruence.

        Raises:
            PreconditionError: For an unknown algebra name.
            ZeroHemiringError: For a one-element algebra.
        """
        alg = builtin_algebra(command.algebra, self._config)
        logger.info(f"exploring congruences of {alg!r}")
        report = Report(f"congruences of {alg.name}")
        report.add(
            f"algebra {alg.name}: {alg.size} elements",
            {"algebra": alg.name, "size": str(alg.size)},
        )
        axioms = validate_algebra(alg)
        report.add(
            f"hemiring axioms: {axioms.describe()}",
            {"axioms_ok": "true" if axioms.ok else "false"},
        )
        if alg.is_additively_idempotent:
            order = natural_order_check(alg)
            report.add(
                f"natural order: {order.describe()}",
                {"natural_order_ok": "true" if order.ok else "false"},
            )
        verdict = is_congruence_simple(alg)
        report.add(
            f"congruence-simple: {'YES' if verdict.simple else 'NO'}",
            {"simple": "true" if verdict.simple else "false"},
        )
        try:
            lattice = all_congruences(alg, self._config.MAX_CONGRUENCE_LATTICE_CARRIER)
            report.add(f"congruences: {len(lattice)}", {"congruences": str(len(lattice))})
        except BoundExceededError as exc:
            logger.warning(f"congruence lattice not enumerated: {exc}")
            report.add(f"congruences: not enumerated ({exc})", {"congruences": "skipped"})
        if verdict.witness is not None:
            theta = verdict.witness
            report.add(f"witness: {verdict.reasons[0]}, {theta.block_count} classes")
            report.add(
                f"witness classes: {_describe_blocks(alg, theta)}", {"witness": block_map(theta)}
            )
        return report
