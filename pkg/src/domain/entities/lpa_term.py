"""Terms of the Leavitt path algebra L_B(E)."""

from typing import FrozenSet, Iterable, Tuple

from ..value_objects.paths import Path
from .graph import Graph

Monomial = Tuple[Path, Path]


def format_monomial(monomial: Monomial) -> str:
    """Print p q* as edges of p followed by the reversed ghosts of q."""
    p, q = monomial
    parts = [str(e) for e in p.edges] + [f"{e}*" for e in reversed(q.edges)]
    return ".".join(parts) if parts else p.start


def monomial_key(monomial: Monomial) -> Tuple:
    return (monomial[0].sort_key(), monomial[1].sort_key())


class LpaTerm:
    """A finite B-linear combination Σ p q* of monomials with r(p) = r(q).

    Addition is idempotent, so a term is just its set of monomials; the
    empty set is zero. No Cuntz-Krieger rewriting happens at this level.
    """

    def __init__(self, graph: Graph, monomials: Iterable[Monomial] = ()):
        self._graph = graph
        self._monomials: FrozenSet[Monomial] = frozenset(monomials)

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def monomials(self) -> FrozenSet[Monomial]:
        return self._monomials

    @property
    def is_zero(self) -> bool:
        return not self._monomials

    def sorted_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(sorted(self._monomials, key=monomial_key))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LpaTerm)
            and self._monomials == other._monomials
            and self._graph == other._graph
        )

    def __hash__(self) -> int:
        return hash(self._monomials)

    def __str__(self) -> str:
        if not self._monomials:
            return "0"
        return " + ".join(format_monomial(m) for m in self.sorted_monomials())

    def __repr__(self) -> str:
        return f"LpaTerm({self})"
