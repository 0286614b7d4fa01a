"""Finite groups, discrete groupoids and semilattices."""

from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions.algebra_exceptions import AxiomViolationError, IndexOutOfRangeError

UNDEFINED = -1


class FiniteGroup:
    """A finite group given by its multiplication table.

    The table is validated on construction; the first failing group axiom
    is reported by name.
    """

    def __init__(self, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None):
        """Initialize and validate a group table.

        Args:
            table: ``table[a][b]`` is the index of the product ab.
            labels: Optional element labels; defaults to ``g0, g1, ...``.

        Raises:
            AxiomViolationError: If closure, associativity, identity or
                inverses fail.
        """
        n = len(table)
        if n == 0:
            raise AxiomViolationError("identity", "empty table")
        rows = [list(row) for row in table]
        for a, row in enumerate(rows):
            if len(row) != n:
                raise AxiomViolationError("closure", f"row {a} has {len(row)} entries")
            for b, ab in enumerate(row):
                if not 0 <= ab < n:
                    raise AxiomViolationError("closure", f"({a},{b}) -> {ab}")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                        raise AxiomViolationError("associativity", f"({a},{b},{c})")
        identity = next(
            (e for e in range(n) if all(rows[e][a] == a and rows[a][e] == a for a in range(n))),
            None,
        )
        if identity is None:
            raise AxiomViolationError("identity")
        inverse = []
        for a in range(n):
            inv = next(
                (b for b in range(n) if rows[a][b] == identity and rows[b][a] == identity), None
            )
            if inv is None:
                raise AxiomViolationError("inverses", f"element {a}")
            inverse.append(inv)
        self.table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in rows)
        self.identity = identity
        self.inverse: Tuple[int, ...] = tuple(inverse)
        self.labels: Tuple[str, ...] = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]


def cyclic_group(n: int) -> FiniteGroup:
    """The cyclic group Z_n with elements g0 (identity), ..., g(n-1)."""
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)])


class FiniteGroupoid:
    """A finite discrete groupoid with an explicit partial composition table.

    ``compose[a][b]`` is the index of ab, defined iff r(b) = s(a), and
    ``UNDEFINED`` otherwise. Source and range map to indices of units.
    """

    def __init__(
        self,
        labels: Sequence[str],
        source: Sequence[int],
        range_: Sequence[int],
        inverse: Sequence[int],
        compose: Sequence[Sequence[int]],
        units: Sequence[int],
    ):
        n = len(labels)
        for name, values in (("source", source), ("range", range_), ("inverse", inverse)):
            if len(values) != n:
                raise AxiomViolationError(
                    "totality", f"{name} has {len(values)} entries, expected {n}"
                )
            for value in values:
                if not 0 <= value < n:
                    raise IndexOutOfRangeError(value, n)
        if len(compose) != n or any(len(row) != n for row in compose):
            raise AxiomViolationError("totality", "composition table is not n x n")
        for row in compose:
            for value in row:
                if value != UNDEFINED and not 0 <= value < n:
                    raise IndexOutOfRangeError(value, n)
        self.labels: Tuple[str, ...] = tuple(labels)
        self.source: Tuple[int, ...] = tuple(source)
        self.range: Tuple[int, ...] = tuple(range_)
        self.inverse: Tuple[int, ...] = tuple(inverse)
        self.compose_table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in compose)
        self.units: Tuple[int, ...] = tuple(sorted(units))
        self._label_index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    def compose(self, a: int, b: int) -> Optional[int]:
        value = self.compose_table[a][b]
        return None if value == UNDEFINED else value

    def is_unit(self, a: int) -> bool:
        return a in self.units

    def index_of(self, label: str) -> int:
        return self._label_index[label]

    def same_structure(self, other: "FiniteGroupoid") -> bool:
        return (
            self.labels == other.labels
            and self.source == other.source
            and self.range == other.range
            and self.inverse == other.inverse
            and self.compose_table == other.compose_table
            and self.units == other.units
        )

    def __repr__(self) -> str:
        return f"FiniteGroupoid(morphisms={self.size}, units={len(self.units)})"


class Semilattice:
    """A finite meet-semilattice (commutative idempotent semigroup)."""

    def __init__(self, labels: Sequence[str], meet: Sequence[Sequence[int]]):
        """Initialize and validate the meet table.

        Raises:
            AxiomViolationError: If the table is not a semilattice.
        """
        n = len(labels)
        rows: List[List[int]] = [list(row) for row in meet]
        if len(rows) != n or any(len(row) != n for row in rows):
            raise AxiomViolationError("totality", "meet table is not n x n")
        for a in range(n):
            if rows[a][a] != a:
                raise AxiomViolationError("idempotency", f"({a})")
            for b in range(n):
                if not 0 <= rows[a][b] < n:
                    raise AxiomViolationError("closure", f"({a},{b})")
                if rows[a][b] != rows[b][a]:
                    raise AxiomViolationError("commutativity", f"({a},{b})")
                for c in range(n):
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                        raise AxiomViolationError("associativity", f"({a},{b},{c})")
        self.labels: Tuple[str, ...] = tuple(labels)
        self.meet_table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in rows)
        self.greatest: Optional[int] = next(
            (x for x in range(n) if all(rows[x][y] == y for y in range(n))), None
        )

    @property
    def size(self) -> int:
        return len(self.labels)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]


def chain_semilattice(n: int) -> Semilattice:
    """The n-element chain 0 < 1 < ... < n-1 with meet = min."""
    meet = [[min(a, b) for b in range(n)] for a in range(n)]
    return Semilattice([str(i) for i in range(n)], meet)
