"""Element application service: the eq, eval and image verbs."""

import logging

from ...domain.entities.cylinder import SteinbergElt
from ...domain.entities.graph import Cycle
from ...domain.entities.lpa_term import LpaTerm
from ...domain.exceptions.graph_exceptions import GraphShapeError
from ...domain.services import cylinder_calculus as cc
from ...domain.services.lpa import eval_cycle_poly, lpa_equals, pi_E
from ...infrastructure.config import Config
from ...infrastructure.serialization import (
    load_graph,
    parse_element_expr,
    parse_laurent,
    parse_path,
)
from ..commands.graph_commands import EqCommand, EvalCommand, ImageCommand
from ..dto.report import Report

logger = logging.getLogger(__name__)


def _image(value) -> SteinbergElt:
    return pi_E(value) if isinstance(value, LpaTerm) else value


class ElementService:
    """Application service for questions about individual elements.

    Pure LPA expressions are compared in L_B(E), which is only decided for
    row-finite graphs; as soon as a ``Z(...)`` literal is involved both
    sides are compared in A_B(G_E), where equality is always decidable.
    """

    def __init__(self, config: Config):
        self._config = config

    def eq(self, command: EqCommand) -> Report:
        """Decide equality of two expressions.

        Raises:
            OutOfScopeError: For two LPA expressions over a graph with bundles.
        """
        g = load_graph(command.graph_path)
        left = parse_element_expr(g, command.left)
        right = parse_element_expr(g, command.right)
        if isinstance(left, LpaTerm) and isinstance(right, LpaTerm):
            algebra = "L_B(E)"
            equal = lpa_equals(left, right)
        else:
            algebra = "A_B(G_E)"
            equal = cc.equals(_image(left), _image(right))
        logger.info(f"eq in {algebra}: {equal}")
        report = Report(f"equality in {algebra}")
        flag = "true" if equal else "false"
        report.add(flag, {"equal": flag, "algebra": algebra})
        return report

    def eval(self, command: EvalCommand) -> Report:
        """Substitute a cycle into a Laurent polynomial and show its image.

        Raises:
            GraphShapeError: If the path is not a cycle.
        """
        g = load_graph(command.graph_path)
        polynomial = parse_laurent(command.polynomial)
        path = parse_path(g, command.cycle)
        sources = [g.source_of(ref) for ref in path.edges]
        if path.is_vertex or path.start != path.end or len(set(sources)) != len(sources):
            raise GraphShapeError(f"{path} is not a cycle")
        term = eval_cycle_poly(g, polynomial, Cycle(path))
        image = pi_E(term)
        report = Report(f"{polynomial} at {path}")
        report.add(f"p(c) = {term}", {"term": str(term).replace(" ", "")})
        report.add(f"π_E(p(c)) = {image}", {"image": str(image).replace(" ", "")})
        return report

    def image(self, command: ImageCommand) -> Report:
        """Canonical form of an expression in A_B(G_E) and whether π_E reaches it."""
        g = load_graph(command.graph_path)
        value = parse_element_expr(g, command.expression)
        element = _image(value)
        reached = cc.in_pi_image(element)
        report = Report(f"image of {command.expression}")
        if isinstance(value, LpaTerm):
            report.add(f"term: {value}", {"term": str(value).replace(" ", "")})
        report.add(f"element: {element}", {"element": str(element).replace(" ", "")})
        report.add(
            f"degrees: {', '.join(str(k) for k in cc.degrees(element)) or 'none'}",
            {"degrees": ",".join(str(k) for k in cc.degrees(element))},
        )
        report.add(
            f"in the image of π_E: {'yes' if reached else 'no'}",
            {"in_pi_image": "true" if reached else "false"},
        )
        return report
