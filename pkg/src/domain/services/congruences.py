"""Congruences, ideals and homomorphism kernels of finite algebras."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from ...infrastructure.config import get_config
from ..entities.finite_algebra import AlgebraHom, CongruenceRelation, FiniteAlgebra
from ..exceptions.algebra_exceptions import (
    BoundExceededError,
    InvalidHomomorphismError,
    PreconditionError,
    ZeroHemiringError,
)
from ..value_objects.semiring import SemiringDescriptor
from ..value_objects.verdicts import CheckReport, SimplenessVerdict
from .finite_algebras import function_algebra

logger = logging.getLogger(__name__)


class _UnionFind:
    """Union-find whose roots are always the least index of their class."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        return True

    def blocks(self) -> List[int]:
        return [self.find(i) for i in range(len(self.parent))]


def _saturate(
    alg: FiniteAlgebra,
    seeds: Iterable[Tuple[int, int]],
    stop_pair: Optional[Tuple[int, int]] = None,
) -> Tuple[_UnionFind, bool]:
    """Close seeds under translations; optionally stop once ``stop_pair`` is related."""
    uf = _UnionFind(alg.size)
    work: List[Tuple[int, int]] = []
    for a, b in seeds:
        alg.check_index(a)
        alg.check_index(b)
        if uf.union(a, b):
            work.append((a, b))
    add_rows, mul_rows = alg.add_rows, alg.mul_rows
    carrier = range(alg.size)
    union = uf.union
    while work:
        if stop_pair is not None and uf.find(stop_pair[0]) == uf.find(stop_pair[1]):
            return uf, True
        a, b = work.pop()
        add_a, add_b = add_rows[a], add_rows[b]
        mul_a, mul_b = mul_rows[a], mul_rows[b]
        for c in carrier:
            x, y = add_a[c], add_b[c]
            if x != y and union(x, y):
                work.append((x, y))
            x, y = mul_a[c], mul_b[c]
            if x != y and union(x, y):
                work.append((x, y))
            row = mul_rows[c]
            x, y = row[a], row[b]
            if x != y and union(x, y):
                work.append((x, y))
    stopped = stop_pair is not None and uf.find(stop_pair[0]) == uf.find(stop_pair[1])
    return uf, stopped


def congruence_closure(alg: FiniteAlgebra, seeds: Iterable[Tuple[int, int]]) -> CongruenceRelation:
    """The least congruence containing the seed pairs.

    Args:
        alg: The algebra.
        seeds: Pairs of carrier indices.

    Returns:
        CongruenceRelation: Blocks represented by their least index.

    Raises:
        IndexOutOfRangeError: If a seed index leaves the carrier.
    """
    uf, _ = _saturate(alg, seeds)
    return CongruenceRelation(uf.blocks())


def _join_irreducibles(alg: FiniteAlgebra) -> List[int]:
    n = alg.size
    A = alg.add_table
    idx = np.arange(n)
    strictly_below = (A == idx[None, :]) & ~np.eye(n, dtype=bool)
    joins = np.full(n, alg.zero, dtype=np.int64)
    for x in range(n):
        above = strictly_below[x]
        joins[above] = A[joins[above], x]
    return [int(j) for j in np.nonzero(joins != idx)[0]]


def _candidate_pairs(alg: FiniteAlgebra) -> List[Tuple[int, int]]:
    """Pairs whose principal congruences are the minimal ones.

    For an additively idempotent algebra, any a < b has a join-irreducible
    j ≤ b with j ≰ a, and Cg(c, c+j) ⊆ Cg(a, b) whenever c ≥ a and j ≰ c.
    So it is enough to look at (c, c+j) for c maximal with j ≰ c. Other
    algebras get every unordered pair.
    """
    n = alg.size
    if not alg.is_additively_idempotent:
        return [(a, b) for a in range(n) for b in range(a + 1, n)]
    A = alg.add_table
    idx = np.arange(n)
    strictly_below = (A == idx[None, :]) & ~np.eye(n, dtype=bool)
    pairs = []
    for j in _join_irreducibles(alg):
        outside = np.nonzero(A[:, j] != idx)[0]
        dominated = strictly_below[np.ix_(outside, outside)].any(axis=1)
        for c in outside[~dominated]:
            pairs.append((int(c), int(A[c, j])))
    return pairs


def is_congruence_simple(alg: FiniteAlgebra) -> SimplenessVerdict:
    """Decide congruence-simpleness by brute force over principal congruences.

    Raises:
        ZeroHemiringError: If the carrier has a single element.
    """
    if alg.size < 2:
        raise ZeroHemiringError()
    stop_pair = None
    if alg.is_additively_idempotent:
        stop_pair = (alg.zero, alg.top())
    pairs = _candidate_pairs(alg)
    logger.debug(f"checking {len(pairs)} principal congruences of {alg.name}")
    for a, b in pairs:
        uf, stopped = _saturate(alg, [(a, b)], stop_pair)
        if stopped:
            continue
        witness = CongruenceRelation(uf.blocks())
        if not witness.is_universal:
            logger.info(f"{alg.name} is not congruence-simple: Cg({a},{b}) is proper")
            return SimplenessVerdict(
                simple=False,
                reasons=(f"Cg({alg.label(a)}, {alg.label(b)}) is proper",),
                witness=witness,
            )
    return SimplenessVerdict(simple=True)


def all_congruences(alg: FiniteAlgebra, bound: Optional[int] = None) -> List[CongruenceRelation]:
    """Enumerate the whole congruence lattice as joins of principal congruences.

    Returns:
        List[CongruenceRelation]: Sorted from the diagonal to the universal relation.

    Raises:
        BoundExceededError: If the carrier exceeds the lattice bound.
    """
    limit = bound if bound is not None else get_config().MAX_CONGRUENCE_LATTICE_CARRIER
    if alg.size > limit:
        raise BoundExceededError(
            "carrier size",
            alg.size,
            limit,
            hint="congruence lattices are enumerated only for small algebras",
        )
    found: Set[CongruenceRelation] = {CongruenceRelation.diagonal(alg.size)}
    for a in range(alg.size):
        for b in range(a + 1, alg.size):
            found.add(congruence_closure(alg, [(a, b)]))
    frontier = list(found)
    while frontier:
        fresh = []
        known = list(found)
        for left in frontier:
            for right in known:
                joined = congruence_closure(alg, left.generating_pairs() + right.generating_pairs())
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    return sorted(found, key=lambda theta: (-theta.block_count, theta.blocks))


def ideal_closure(alg: FiniteAlgebra, gens: Iterable[int]) -> Set[int]:
    """The least ideal containing ``gens``: closed under + and two-sided multiplication."""
    ideal: Set[int] = {alg.zero}
    work = []
    for g in gens:
        alg.check_index(g)
        if g not in ideal:
            ideal.add(g)
            work.append(g)
    carrier = range(alg.size)
    while work:
        x = work.pop()
        produced = [alg.add(x, y) for y in ideal]
        produced.extend(alg.mul(s, x) for s in carrier)
        produced.extend(alg.mul(x, s) for s in carrier)
        for y in produced:
            if y not in ideal:
                ideal.add(y)
                work.append(y)
    return ideal


def check_congruence_axioms(
    desc: SemiringDescriptor,
    relation: Callable[[Any, Any], bool],
    samples: Sequence[Any],
) -> CheckReport:
    """Check that a pair predicate behaves as a congruence on sampled elements.

    Args:
        desc: The semiring the samples live in.
        relation: The candidate congruence as a predicate.
        samples: Elements to test on.

    Returns:
        CheckReport: The first violation, or none.

    Raises:
        PreconditionError: If ``samples`` is empty.
    """
    if not samples:
        raise PreconditionError("samples must be nonempty")
    name = f"congruence on {desc.name}"
    examined = 0
    related = {(i, j): relation(x, y) for i, x in enumerate(samples) for j, y in enumerate(samples)}
    for i, x in enumerate(samples):
        if not related[(i, i)]:
            return CheckReport(name, f"reflexivity fails at {x}", examined)
    for (i, j), holds in related.items():
        examined += 1
        if not holds:
            continue
        x, y = samples[i], samples[j]
        if not related[(j, i)]:
            return CheckReport(name, f"symmetry fails at ({x}, {y})", examined)
        for k, z in enumerate(samples):
            if related[(j, k)] and not related[(i, k)]:
                return CheckReport(name, f"transitivity fails at ({x}, {y}, {z})", examined)
            for label, left, right in (
                ("s+", desc.add(z, x), desc.add(z, y)),
                ("s·", desc.mul(z, x), desc.mul(z, y)),
                ("·s", desc.mul(x, z), desc.mul(y, z)),
            ):
                if not relation(left, right):
                    violation = f"translation {label} fails at ({x}, {y}) with s={z}"
                    return CheckReport(name, violation, examined)
    return CheckReport(name, None, examined)


@dataclass(frozen=True)
class HomKernel:
    """Kernel congruence of a homomorphism with its two derived flags."""

    kernel: CongruenceRelation
    is_injective: bool
    is_zero: bool


def validate_hom(h: AlgebraHom) -> None:
    """Check that ``h`` preserves zero, addition and multiplication.

    Raises:
        InvalidHomomorphismError: Naming the first failing law.
    """
    image = np.array(h.mapping, dtype=np.int64)
    src, tgt = h.source, h.target
    if image[src.zero] != tgt.zero:
        raise InvalidHomomorphismError("zero is not preserved")
    for law, src_table, tgt_table in (
        ("addition", src.add_table, tgt.add_table),
        ("multiplication", src.mul_table, tgt.mul_table),
    ):
        bad = image[src_table] != tgt_table[image[:, None], image[None, :]]
        if bad.any():
            a, b = (int(i) for i in np.argwhere(bad)[0])
            raise InvalidHomomorphismError(f"{law} fails at ({src.label(a)}, {src.label(b)})")


def hom_kernel(h: AlgebraHom) -> HomKernel:
    validate_hom(h)
    kernel = CongruenceRelation(h.mapping)
    return HomKernel(
        kernel=kernel,
        is_injective=kernel.is_diagonal,
        is_zero=all(image == h.target.zero for image in h.mapping),
    )


def projection_hom(n: int, coords: Sequence[int]) -> AlgebraHom:
    """The projection B^n → B^k onto the listed coordinates."""
    source = function_algebra(n)
    target = function_algebra(len(coords))
    mapping = []
    for u in range(source.size):
        mapping.append(sum(((u >> c) & 1) << i for i, c in enumerate(coords)))
    return AlgebraHom(source, target, mapping)


def quotient_hom(alg: FiniteAlgebra, theta: CongruenceRelation) -> AlgebraHom:
    """The quotient map alg → alg/θ, blocks ordered by least element."""
    reps = sorted(set(theta.blocks))
    position = {rep: i for i, rep in enumerate(reps)}

    def block(x: int) -> int:
        return position[theta.blocks[x]]

    add_table = [[block(alg.add(a, b)) for b in reps] for a in reps]
    mul_table = [[block(alg.mul(a, b)) for b in reps] for a in reps]
    quotient = FiniteAlgebra(
        f"{alg.name}/θ",
        [f"[{alg.label(rep)}]" for rep in reps],
        add_table,
        mul_table,
        zero=block(alg.zero),
        one=block(alg.one) if alg.one is not None else None,
    )
    return AlgebraHom(alg, quotient, [block(x) for x in range(alg.size)])
