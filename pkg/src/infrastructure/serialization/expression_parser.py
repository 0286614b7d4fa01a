"""Recursive-descent parser for element expressions over a graph.

    expr    := term ('+' term)*
    term    := factor (['.'] factor)*
    factor  := atom '*'*
    atom    := '0' | id | '(' expr ')' | 'Z' '(' path ';' path [';' refs] ')'
    path    := vertex-id | edge-ref ('.' edge-ref)*
    refs    := ['~'] edge-ref (',' ['~'] edge-ref)*

Bundle members are written ``es[3]``; ``e3`` is accepted as well when the
graph has a bundle ``e`` or ``es``. LPA expressions evaluate to LpaTerm;
as soon as a ``Z(...)`` literal is involved the LPA parts are sent through
π_E and the result is a SteinbergElt.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Union

from ...domain.entities.cylinder import SteinbergElt
from ...domain.entities.graph import Graph
from ...domain.entities.lpa_term import LpaTerm
from ...domain.exceptions.element_exceptions import ExpressionSyntaxError, UnknownIdentifierError
from ...domain.exceptions.graph_exceptions import GraphShapeError
from ...domain.services import cylinder_calculus as cc
from ...domain.services import lpa
from ...domain.value_objects.paths import EdgeRef, Path

logger = logging.getLogger(__name__)

Element = Union[LpaTerm, SteinbergElt]

_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)(?:\[(?P<index>\d+)\])?"
    r"|(?P<number>\d+)|(?P<symbol>[+.*();,~]))"
)
_SHORTHAND = re.compile(r"([A-Za-z][A-Za-z0-9_]*?)(\d+)\Z")

IDENT, NUMBER, SYMBOL, END = "ident", "number", "symbol", "end"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int
    index: Optional[int] = None


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            column = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ExpressionSyntaxError(column, f"unexpected character '{text[column - 1]}'")
        kind = match.lastgroup if match.lastgroup != "index" else IDENT
        start = match.start(kind) + 1
        index = match.group("index")
        tokens.append(
            Token(kind, match.group(kind), start, int(index) if index is not None else None)
        )
        pos = match.end()
    tokens.append(Token(END, "", len(text) + 1))
    return tokens


def _as_cylinder_element(value: Element) -> SteinbergElt:
    return lpa.pi_E(value) if isinstance(value, LpaTerm) else value


def _add(a: Element, b: Element) -> Element:
    if isinstance(a, LpaTerm) and isinstance(b, LpaTerm):
        return lpa.lpa_add(a, b)
    return cc.add(_as_cylinder_element(a), _as_cylinder_element(b))


def _mul(a: Element, b: Element) -> Element:
    if isinstance(a, LpaTerm) and isinstance(b, LpaTerm):
        return lpa.lpa_mul(a, b)
    return cc.mul(_as_cylinder_element(a), _as_cylinder_element(b))


def _star(a: Element) -> Element:
    return lpa.lpa_star(a) if isinstance(a, LpaTerm) else cc.star(a)


class _Parser:
    def __init__(self, graph: Graph, text: str):
        self.graph = graph
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != END:
            self.pos += 1
        return token

    def at_symbol(self, symbol: str) -> bool:
        token = self.peek()
        return token.kind == SYMBOL and token.text == symbol

    def expect(self, symbol: str) -> Token:
        token = self.advance()
        if token.kind != SYMBOL or token.text != symbol:
            raise ExpressionSyntaxError(token.column, f"expected '{symbol}'{_found(token)}")
        return token

    def starts_factor(self) -> bool:
        token = self.peek()
        return token.kind in (IDENT, NUMBER) or (token.kind == SYMBOL and token.text == "(")

    def finish(self) -> None:
        token = self.peek()
        if token.kind != END:
            raise ExpressionSyntaxError(token.column, f"unexpected '{token.text}'")

    def expr(self) -> Element:
        value = self.term()
        while self.at_symbol("+"):
            op = self.advance()
            if not self.starts_factor():
                raise ExpressionSyntaxError(op.column, "'+' needs a right operand")
            value = _add(value, self.term())
        return value

    def term(self) -> Element:
        value = self.factor()
        while True:
            if self.at_symbol("."):
                op = self.advance()
                if not self.starts_factor():
                    raise ExpressionSyntaxError(op.column, "'.' needs a right operand")
            elif not self.starts_factor():
                return value
            value = _mul(value, self.factor())

    def factor(self) -> Element:
        value = self.atom()
        while self.at_symbol("*"):
            self.advance()
            value = _star(value)
        return value

    def atom(self) -> Element:
        token = self.advance()
        if token.kind == NUMBER:
            if token.text != "0":
                raise ExpressionSyntaxError(token.column, "the only numeral is 0")
            return lpa.lpa_zero(self.graph)
        if token.kind == SYMBOL and token.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == IDENT:
            if token.text == "Z" and token.index is None and self.at_symbol("("):
                return self.cylinder()
            if token.index is None and self.graph.has_vertex(token.text):
                return lpa.lpa_vertex(self.graph, token.text)
            return lpa.lpa_edge(self.graph, self.edge_ref(token))
        raise ExpressionSyntaxError(
            token.column, f"expected an identifier, '0' or '('{_found(token)}"
        )

    def cylinder(self) -> SteinbergElt:
        self.expect("(")
        alpha = self.path()
        self.expect(";")
        beta = self.path()
        excluded = []
        if self.at_symbol(";"):
            self.advance()
            while True:
                if self.at_symbol("~"):
                    self.advance()
                ref = self.edge_ref(self.identifier())
                if self.graph.source_of(ref) != alpha.end:
                    raise GraphShapeError(f"excluded edge {ref} does not start at {alpha.end}")
                excluded.append(ref)
                if not self.at_symbol(","):
                    break
                self.advance()
        self.expect(")")
        return cc.pair_indicator(self.graph, alpha, beta, excluded)

    def path(self) -> Path:
        first = self.identifier()
        if first.index is None and self.graph.has_vertex(first.text):
            return Path.vertex(first.text)
        refs = [self.edge_ref(first)]
        while self.at_symbol("."):
            self.advance()
            refs.append(self.edge_ref(self.identifier()))
        return self.graph.path(self.graph.source_of(refs[0]), refs)

    def identifier(self) -> Token:
        token = self.advance()
        if token.kind != IDENT:
            raise ExpressionSyntaxError(token.column, f"expected an identifier{_found(token)}")
        return token

    def edge_ref(self, token: Token) -> EdgeRef:
        """Resolve an edge id, a bundle member ``es[3]`` or its shorthand ``e3``."""
        graph = self.graph
        if token.index is not None:
            if graph.has_bundle(token.text):
                return EdgeRef(token.text, token.index)
            raise UnknownIdentifierError(f"{token.text}[{token.index}]")
        if graph.has_edge(token.text):
            return EdgeRef(token.text)
        match = _SHORTHAND.match(token.text)
        if match:
            stem, digits = match.groups()
            for bundle in (stem, stem + "s"):
                if graph.has_bundle(bundle):
                    return EdgeRef(bundle, int(digits))
        raise UnknownIdentifierError(token.text)


def _found(token: Token) -> str:
    return ", found end of input" if token.kind == END else f", found '{token.text}'"


def parse_element_expr(graph: Graph, text: str) -> Element:
    """Parse an element expression over ``graph``.

    Returns:
        LpaTerm for pure LPA expressions, SteinbergElt once a ``Z(...)``
        literal occurs.

    Raises:
        ExpressionSyntaxError: With the 1-based column of the problem.
        UnknownIdentifierError: For ids the graph does not have.
        RangeMismatchError: For ``Z(p; q)`` with r(p) ≠ r(q).
        GraphShapeError: For paths whose edges do not compose.
    """
    parser = _Parser(graph, text)
    value = parser.expr()
    parser.finish()
    logger.debug(f"parsed '{text}' as {type(value).__name__}")
    return value


def parse_path(graph: Graph, text: str) -> Path:
    """Parse a single path: a vertex id or dot-separated edge references."""
    parser = _Parser(graph, text)
    path = parser.path()
    parser.finish()
    return path
