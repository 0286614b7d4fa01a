"""Finite hemirings with explicit tables, their congruences and homomorphisms."""

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions.algebra_exceptions import AxiomViolationError, IndexOutOfRangeError


def _frozen_table(table: Sequence[Sequence[int]], size: int, name: str) -> np.ndarray:
    array = np.array(table, dtype=np.int64)
    if array.shape != (size, size):
        raise AxiomViolationError(
            "totality", f"{name} table has shape {array.shape}, expected ({size}, {size})"
        )
    if array.size and (array.min() < 0 or array.max() >= size):
        bad = int(array.max() if array.max() >= size else array.min())
        raise IndexOutOfRangeError(bad, size)
    array.flags.writeable = False
    return array


class FiniteAlgebra:
    """A finite hemiring given by its carrier labels and operation tables.

    Elements are carrier indices. Tables are stored as read-only numpy
    arrays; scalar lookups go through cached nested lists, which are much
    faster than numpy indexing inside the closure loops.
    """

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        add_table: Sequence[Sequence[int]],
        mul_table: Sequence[Sequence[int]],
        zero: int,
        one: Optional[int] = None,
        local_units: Optional[Iterable[int]] = None,
    ):
        """Initialize a finite algebra.

        Args:
            name: Display name, e.g. ``M_2(B)``.
            labels: One label per carrier index.
            add_table: Addition table, ``add_table[a][b] = a + b``.
            mul_table: Multiplication table, ``mul_table[a][b] = a·b``.
            zero: Index of the additive identity.
            one: Index of the multiplicative identity, if the algebra is unital.
            local_units: Indices of a known set of local units.

        Raises:
            AxiomViolationError: If a table is not total.
            IndexOutOfRangeError: If a table or a distinguished index leaves the carrier.
        """
        size = len(labels)
        self._name = name
        self._labels: Tuple[str, ...] = tuple(labels)
        self._add = _frozen_table(add_table, size, "add")
        self._mul = _frozen_table(mul_table, size, "mul")
        for index in [zero] + ([one] if one is not None else []) + list(local_units or []):
            if not 0 <= index < size:
                raise IndexOutOfRangeError(index, size)
        self._zero = zero
        self._one = one
        self._local_units: Optional[FrozenSet[int]] = (
            frozenset(local_units) if local_units is not None else None
        )
        self._add_rows: List[List[int]] = self._add.tolist()
        self._mul_rows: List[List[int]] = self._mul.tolist()
        self._label_index: Optional[Dict[str, int]] = None
        self._idempotent: Optional[bool] = None

    @property
    def name(self) -> str:
        return self._name

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def zero(self) -> int:
        return self._zero

    @property
    def one(self) -> Optional[int]:
        return self._one

    @property
    def local_units(self) -> Optional[FrozenSet[int]]:
        return self._local_units

    @property
    def add_table(self) -> np.ndarray:
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        return self._mul

    @property
    def add_rows(self) -> List[List[int]]:
        return self._add_rows

    @property
    def mul_rows(self) -> List[List[int]]:
        return self._mul_rows

    def add(self, a: int, b: int) -> int:
        return self._add_rows[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul_rows[a][b]

    def sum(self, indices: Iterable[int]) -> int:
        total = self._zero
        for index in indices:
            total = self._add_rows[total][index]
        return total

    def label(self, index: int) -> str:
        if not 0 <= index < self.size:
            raise IndexOutOfRangeError(index, self.size)
        return self._labels[index]

    def index_of(self, label: str) -> int:
        """Look up the carrier index of a label.

        Raises:
            KeyError: If no element carries the label.
        """
        if self._label_index is None:
            self._label_index = {lbl: i for i, lbl in enumerate(self._labels)}
        return self._label_index[label]

    def check_index(self, index: int) -> None:
        if not 0 <= index < self.size:
            raise IndexOutOfRangeError(index, self.size)

    @property
    def is_additively_idempotent(self) -> bool:
        if self._idempotent is None:
            self._idempotent = bool((np.diagonal(self._add) == np.arange(self.size)).all())
        return self._idempotent

    def leq(self, a: int, b: int) -> bool:
        """Natural order of an additively idempotent algebra: a ≤ b iff a + b = b."""
        return self._add_rows[a][b] == b

    def top(self) -> int:
        """Sum of the whole carrier (the greatest element when idempotent)."""
        return self.sum(range(self.size))

    def same_tables(self, other: "FiniteAlgebra") -> bool:
        return (
            self.size == other.size
            and self._zero == other._zero
            and self._one == other._one
            and bool(np.array_equal(self._add, other._add))
            and bool(np.array_equal(self._mul, other._mul))
        )

    def __repr__(self) -> str:
        return f"FiniteAlgebra(name={self._name!r}, size={self.size})"


class CongruenceRelation:
    """A partition of a finite algebra's carrier.

    Each carrier index maps to the least index of its block, so two
    relations over the same algebra are equal iff their block tuples are.
    """

    def __init__(self, blocks: Sequence[int]):
        """Initialize from a block map, normalizing representatives to least indices.

        Args:
            blocks: ``blocks[i]`` is any block identifier for index ``i``.
        """
        least: Dict[int, int] = {}
        normalized = []
        for index, block in enumerate(blocks):
            normalized.append(least.setdefault(block, index))
        self._blocks: Tuple[int, ...] = tuple(normalized)

    @classmethod
    def diagonal(cls, size: int) -> "CongruenceRelation":
        return cls(range(size))

    @classmethod
    def universal(cls, size: int) -> "CongruenceRelation":
        return cls([0] * size)

    @property
    def blocks(self) -> Tuple[int, ...]:
        return self._blocks

    @property
    def size(self) -> int:
        return len(self._blocks)

    def related(self, a: int, b: int) -> bool:
        return self._blocks[a] == self._blocks[b]

    @property
    def block_count(self) -> int:
        return len(set(self._blocks))

    @property
    def is_diagonal(self) -> bool:
        return self.block_count == self.size

    @property
    def is_universal(self) -> bool:
        return self.block_count == 1

    def classes(self) -> List[Tuple[int, ...]]:
        """Blocks as sorted index tuples, ordered by their least element."""
        grouped: Dict[int, List[int]] = {}
        for index, rep in enumerate(self._blocks):
            grouped.setdefault(rep, []).append(index)
        return [tuple(grouped[rep]) for rep in sorted(grouped)]

    def generating_pairs(self) -> List[Tuple[int, int]]:
        """Pairs (rep, i) that generate the relation as an equivalence."""
        return [(rep, i) for i, rep in enumerate(self._blocks) if rep != i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CongruenceRelation) and self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __repr__(self) -> str:
        return f"CongruenceRelation(blocks={len(self.classes())}, size={self.size})"


class AlgebraHom:
    """A map between finite algebras given on carrier indices.

    Construction only checks the shape of the map; ``hom_kernel`` validates
    the preservation laws before using it.
    """

    def __init__(self, source: FiniteAlgebra, target: FiniteAlgebra, mapping: Sequence[int]):
        if len(mapping) != source.size:
            raise AxiomViolationError(
                "totality", f"map has {len(mapping)} entries for a carrier of {source.size}"
            )
        for image in mapping:
            target.check_index(image)
        self.source = source
        self.target = target
        self.mapping: Tuple[int, ...] = tuple(mapping)

    def __call__(self, index: int) -> int:
        return self.mapping[index]

    @classmethod
    def identity(cls, alg: FiniteAlgebra) -> "AlgebraHom":
        return cls(alg, alg, range(alg.size))

    @classmethod
    def zero_map(cls, source: FiniteAlgebra, target: FiniteAlgebra) -> "AlgebraHom":
        return cls(source, target, [target.zero] * source.size)
