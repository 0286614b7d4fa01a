"""Laurent polynomials over B written as ``1 + x + x^-2``."""

import re

from ...domain.exceptions.element_exceptions import ExpressionSyntaxError
from ...domain.value_objects.laurent import LaurentPolyB

_TERM = re.compile(r"\s*(?:(?P<one>1)|x(?:\s*\^\s*(?P<exp>-?\d+))?)\s*")


def parse_laurent(text: str) -> LaurentPolyB:
    """Parse a sum of monomials ``1``, ``x`` and ``x^k``; ``0`` is the empty sum.

    Raises:
        ExpressionSyntaxError: With the 1-based column of the offending character.
    """
    if text.strip() == "0":
        return LaurentPolyB.of(())
    exponents = []
    pos = 0
    while True:
        match = _TERM.match(text, pos)
        if match is None:
            rest = text[pos:]
            column = pos + len(rest) - len(rest.lstrip()) + 1
            raise ExpressionSyntaxError(column, "expected '1', 'x' or 'x^k'")
        if match.group("one"):
            exponents.append(0)
        else:
            exponents.append(int(match.group("exp")) if match.group("exp") else 1)
        pos = match.end()
        if pos == len(text):
            return LaurentPolyB.of(exponents)
        if text[pos] != "+":
            raise ExpressionSyntaxError(pos + 1, f"unexpected '{text[pos]}'")
        pos += 1
