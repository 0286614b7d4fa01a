"""Finite discrete groupoids: construction, criteria and Steinberg algebras over B."""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np

from ...infrastructure.config import get_config
from ..entities.finite_algebra import FiniteAlgebra
from ..entities.graph import Graph
from ..entities.groupoid import UNDEFINED, FiniteGroup, FiniteGroupoid, Semilattice
from ..exceptions.algebra_exceptions import BoundExceededError, PreconditionError
from ..exceptions.graph_exceptions import GraphShapeError
from ..value_objects.verdicts import CheckReport, SimplenessVerdict
from .congruences import is_congruence_simple
from .finite_algebras import function_algebra, subset_semiring
from .graph_analysis import is_acyclic, sink_paths_from

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSpec:
    """The pair groupoid X × X on n points."""

    n: int


@dataclass(frozen=True)
class GroupSpec:
    """A group viewed as a one-object groupoid."""

    group: FiniteGroup


@dataclass(frozen=True)
class UnionSpec:
    """Disjoint union of groupoids."""

    parts: Tuple["GroupoidSpec", ...]


GroupoidSpec = Union[PairSpec, GroupSpec, UnionSpec]


@dataclass
class _RawGroupoid:
    labels: List[str]
    source: List[int]
    range: List[int]
    inverse: List[int]
    compose: List[List[int]]
    units: List[int]


def _raw_pair(n: int) -> _RawGroupoid:
    if n < 1:
        raise PreconditionError(f"pair groupoid needs at least one point, got {n}")

    def idx(i: int, j: int) -> int:
        return i * n + j

    cells = [(i, j) for i in range(n) for j in range(n)]
    compose = [[UNDEFINED] * (n * n) for _ in cells]
    for i, j in cells:
        for k, l in cells:
            if j == k:
                compose[idx(i, j)][idx(k, l)] = idx(i, l)
    return _RawGroupoid(
        labels=[f"(x{i + 1},x{j + 1})" for i, j in cells],
        source=[idx(j, j) for _, j in cells],
        range=[idx(i, i) for i, _ in cells],
        inverse=[idx(j, i) for i, j in cells],
        compose=compose,
        units=[idx(i, i) for i in range(n)],
    )


def _raw_group(group: FiniteGroup) -> _RawGroupoid:
    n = group.order
    return _RawGroupoid(
        labels=list(group.labels),
        source=[group.identity] * n,
        range=[group.identity] * n,
        inverse=list(group.inverse),
        compose=[list(row) for row in group.table],
        units=[group.identity],
    )


def _raw_union(parts: Sequence[_RawGroupoid]) -> _RawGroupoid:
    total = sum(len(p.labels) for p in parts)
    out = _RawGroupoid([], [], [], [], [[UNDEFINED] * total for _ in range(total)], [])
    offset = 0
    for k, part in enumerate(parts):
        size = len(part.labels)
        out.labels.extend(f"{k}.{label}" for label in part.labels)
        out.source.extend(offset + s for s in part.source)
        out.range.extend(offset + r for r in part.range)
        out.inverse.extend(offset + i for i in part.inverse)
        out.units.extend(offset + u for u in part.units)
        for a in range(size):
            for b in range(size):
                value = part.compose[a][b]
                if value != UNDEFINED:
                    out.compose[offset + a][offset + b] = offset + value
        offset += size
    return out


def _raw(spec: GroupoidSpec) -> _RawGroupoid:
    if isinstance(spec, PairSpec):
        return _raw_pair(spec.n)
    if isinstance(spec, GroupSpec):
        return _raw_group(spec.group)
    if isinstance(spec, UnionSpec):
        if not spec.parts:
            raise PreconditionError("disjoint union needs at least one part")
        return _raw_union([_raw(part) for part in spec.parts])
    raise PreconditionError(f"unknown groupoid spec {spec!r}")


def canonical_groupoid(raw: _RawGroupoid) -> FiniteGroupoid:
    """Reindex morphisms canonically: units first, then by label."""
    units = set(raw.units)
    order = sorted(range(len(raw.labels)), key=lambda i: (i not in units, raw.labels[i]))
    position = {old: new for new, old in enumerate(order)}

    def remap(i: int) -> int:
        return UNDEFINED if i == UNDEFINED else position[i]

    return FiniteGroupoid(
        labels=[raw.labels[i] for i in order],
        source=[position[raw.source[i]] for i in order],
        range_=[position[raw.range[i]] for i in order],
        inverse=[position[raw.inverse[i]] for i in order],
        compose=[[remap(raw.compose[a][b]) for b in order] for a in order],
        units=[position[u] for u in raw.units],
    )


def _check_morphism_bound(size: int, bound: Optional[int]) -> None:
    limit = bound if bound is not None else get_config().MAX_GROUPOID_MORPHISMS
    if size > limit:
        raise BoundExceededError("groupoid size", size, limit)


def build_groupoid(spec: GroupoidSpec, bound: Optional[int] = None) -> FiniteGroupoid:
    """Build a pair groupoid, a group or a disjoint union of those.

    Raises:
        BoundExceededError: If the groupoid has more morphisms than the bound.
        PreconditionError: For an empty union or a pair groupoid on no points.
    """
    raw = _raw(spec)
    _check_morphism_bound(len(raw.labels), bound)
    return canonical_groupoid(raw)


def validate_groupoid(g: FiniteGroupoid) -> CheckReport:
    """Check every groupoid axiom exhaustively and report the first failure."""
    name = "groupoid axioms"
    units = set(g.units)
    if set(g.source) != units or set(g.range) != units:
        return CheckReport(name, "units differ from the images of source and range")
    for u in g.units:
        if g.source[u] != u or g.range[u] != u or g.inverse[u] != u:
            return CheckReport(name, f"unit {g.labels[u]} is not an identity arrow")
    n = g.size
    for a in range(n):
        for b in range(n):
            ab = g.compose(a, b)
            if (ab is not None) != (g.range[b] == g.source[a]):
                return CheckReport(name, f"composability of ({g.labels[a]}, {g.labels[b]})")
            if ab is not None and (g.source[ab] != g.source[b] or g.range[ab] != g.range[a]):
                return CheckReport(
                    name, f"endpoints of ({g.labels[a]}, {g.labels[b]}) -> {g.labels[ab]}"
                )
    for a in range(n):
        if g.compose(a, g.source[a]) != a or g.compose(g.range[a], a) != a:
            return CheckReport(name, f"identity law at {g.labels[a]}")
        inv = g.inverse[a]
        if g.compose(a, inv) != g.range[a] or g.compose(inv, a) != g.source[a]:
            return CheckReport(name, f"inverse law at {g.labels[a]}")
    for a in range(n):
        for b in range(n):
            ab = g.compose(a, b)
            if ab is None:
                continue
            for c in range(n):
                bc = g.compose(b, c)
                if bc is None:
                    continue
                if g.compose(ab, c) != g.compose(a, bc):
                    return CheckReport(
                        name,
                        f"associativity at ({g.labels[a]}, {g.labels[b]}, {g.labels[c]})",
                    )
    return CheckReport(name, None, n * n * n)


def orbits(g: FiniteGroupoid) -> List[FrozenSet[int]]:
    """Orbits of the unit space: u ~ v when some morphism goes from u to v."""
    parent = {u: u for u in g.units}

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for a in range(g.size):
        ra, rb = find(g.source[a]), find(g.range[a])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    grouped = {}
    for u in g.units:
        grouped.setdefault(find(u), set()).add(u)
    return [frozenset(grouped[root]) for root in sorted(grouped)]


def isotropy(g: FiniteGroupoid) -> List[int]:
    """Morphisms with equal source and range."""
    return [a for a in range(g.size) if g.source[a] == g.range[a]]


def is_minimal(g: FiniteGroupoid) -> bool:
    """Minimal: with the discrete topology, a single orbit of units."""
    return len(orbits(g)) == 1


def is_effective(g: FiniteGroupoid) -> bool:
    """Effective: with the discrete topology, isotropy consists of units only."""
    return all(g.is_unit(a) for a in isotropy(g))


def orbit_subgroupoid(g: FiniteGroupoid, orbit: FrozenSet[int]) -> FiniteGroupoid:
    """The reduction G|_O: every morphism whose source lies in ``orbit``.

    Raises:
        PreconditionError: If ``orbit`` is not one of the orbits of ``g``.
    """
    if orbit not in orbits(g):
        raise PreconditionError("not an orbit of the groupoid")
    kept = [a for a in range(g.size) if g.source[a] in orbit]
    position = {old: new for new, old in enumerate(kept)}

    def remap(i: Optional[int]) -> int:
        return UNDEFINED if i is None else position[i]

    raw = _RawGroupoid(
        labels=[g.labels[a] for a in kept],
        source=[position[g.source[a]] for a in kept],
        range=[position[g.range[a]] for a in kept],
        inverse=[position[g.inverse[a]] for a in kept],
        compose=[[remap(g.compose(a, b)) for b in kept] for a in kept],
        units=[position[u] for u in g.units if u in orbit],
    )
    return canonical_groupoid(raw)


def orbit_restriction_check(g: FiniteGroupoid, orbit: FrozenSet[int]) -> CheckReport:
    """Check that U ↦ U ∩ G|_O is a homomorphism of A_B(G) with a proper kernel.

    Unions are always preserved; products are preserved when a defined
    product ab lies over the orbit exactly when a and b do. The kernel is
    proper when the orbit is nonempty and some morphism lies outside it.
    Only the groupoid is inspected, so this scales past the carrier bound.
    """
    name = "restriction to an orbit"
    inside = [g.source[a] in orbit for a in range(g.size)]
    examined = 0
    for a in range(g.size):
        for b in range(g.size):
            ab = g.compose(a, b)
            if ab is None:
                continue
            examined += 1
            if not inside[a] == inside[b] == inside[ab]:
                return CheckReport(
                    name, f"({g.labels[a]}, {g.labels[b]}) crosses the orbit", examined
                )
    if not any(inside):
        return CheckReport(name, "empty orbit: the kernel is universal", examined)
    if all(inside):
        return CheckReport(name, "single orbit: the kernel is the diagonal", examined)
    return CheckReport(name, None, examined)


def steinberg_finite(g: FiniteGroupoid, bound: Optional[int] = None) -> FiniteAlgebra:
    """The Steinberg algebra A_B(G) of a finite discrete groupoid.

    Subsets of morphisms encoded as bitmasks; UV = {αβ : r(β) = s(α)}. The
    subsets of the unit space are recorded as local units.

    Args:
        g: The groupoid.
        bound: Carrier-size bound override; it also sets the morphism limit
            to the largest n with 2^n <= bound.

    Raises:
        BoundExceededError: If 2^|G| is out of bounds.
    """
    if bound is not None:
        limit = bound.bit_length() - 1
    else:
        limit = get_config().MAX_STEINBERG_MORPHISMS
    if g.size > limit:
        raise BoundExceededError("groupoid size", g.size, limit, hint="A_B(G) has 2^|G| elements")
    units_mask = sum(1 << u for u in g.units)
    local_units = [m for m in range(units_mask + 1) if m & units_mask == m]
    logger.debug(f"building A_B(G) for {g!r}")
    return subset_semiring(
        f"A_B(G{g.size})",
        g.labels,
        g.compose,
        one=units_mask,
        local_units=local_units,
        bound=bound,
    )


def subset_inverse(g: FiniteGroupoid) -> np.ndarray:
    """The map U ↦ U⁻¹ on bitmask-encoded subsets."""
    codes = np.arange(1 << g.size, dtype=np.int64)
    inverse = np.zeros_like(codes)
    for a in range(g.size):
        inverse |= ((codes >> a) & 1) << g.inverse[a]
    return inverse


def involution_check(alg: FiniteAlgebra, g: FiniteGroupoid) -> CheckReport:
    """Check (UV)⁻¹ = V⁻¹U⁻¹ and (U⁻¹)⁻¹ = U on all subsets."""
    inverse = subset_inverse(g)
    if not (inverse[inverse] == np.arange(alg.size)).all():
        return CheckReport("involution", "(U⁻¹)⁻¹ ≠ U for some U", alg.size)
    M = alg.mul_table
    bad = inverse[M] != M[np.ix_(inverse, inverse)].T
    if bad.any():
        u, v = (int(i) for i in np.argwhere(bad)[0])
        violation = f"(UV)⁻¹ ≠ V⁻¹U⁻¹ at ({alg.label(u)}, {alg.label(v)})"
        return CheckReport("involution", violation, alg.size**2)
    return CheckReport("involution", None, alg.size**2)


def graph_groupoid_finite(g: Graph, bound: Optional[int] = None) -> FiniteGroupoid:
    """The graph groupoid of a finite acyclic bundle-free graph.

    Boundary paths are the paths ending at sinks; morphisms are
    (p, |p|−|q|, q) for boundary paths p, q with the same range.

    Raises:
        GraphShapeError: For cyclic graphs or graphs with bundles.
    """
    if not g.is_row_finite or not is_acyclic(g):
        raise GraphShapeError("infinite unit space; use cylinder-calculus")
    by_sink = {}
    for v in g.sorted_vertices:
        for path in sink_paths_from(g, v):
            by_sink.setdefault(path.end, []).append(path)
    labels: List[str] = []
    triples = []
    for sink in sorted(by_sink):
        paths = by_sink[sink]
        for p in paths:
            for q in paths:
                triples.append((p, q))
                labels.append(morphism_label(p, q))
    _check_morphism_bound(len(triples), bound)
    index = {(str(p), str(q)): i for i, (p, q) in enumerate(triples)}
    n = len(triples)
    compose = [[UNDEFINED] * n for _ in range(n)]
    for a, (p, q) in enumerate(triples):
        for b, (q2, z) in enumerate(triples):
            if q == q2:
                compose[a][b] = index[(str(p), str(z))]
    raw = _RawGroupoid(
        labels=labels,
        source=[index[(str(q), str(q))] for _, q in triples],
        range=[index[(str(p), str(p))] for p, _ in triples],
        inverse=[index[(str(q), str(p))] for p, q in triples],
        compose=compose,
        units=[i for i, (p, q) in enumerate(triples) if p == q],
    )
    return canonical_groupoid(raw)


def morphism_label(p, q) -> str:
    """Label of the graph-groupoid morphism (p, |p|−|q|, q)."""
    return f"({p},{len(p) - len(q)},{q})"


@dataclass(frozen=True)
class TheoremCheck:
    """Brute-force simpleness against the minimal-and-effective criterion."""

    simple: SimplenessVerdict
    minimal: bool
    effective: bool

    @property
    def lhs(self) -> bool:
        return self.simple.simple

    @property
    def rhs(self) -> bool:
        return self.minimal and self.effective

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


def verify_simpleness_theorem(g: FiniteGroupoid, bound: Optional[int] = None) -> TheoremCheck:
    verdict = is_congruence_simple(steinberg_finite(g, bound))
    check = TheoremCheck(simple=verdict, minimal=is_minimal(g), effective=is_effective(g))
    if not check.agree:
        logger.warning(f"simpleness criterion disagrees with brute force for {g!r}")
    return check


def semilattice_groupoid(e: Semilattice) -> FiniteGroupoid:
    """The unit-only groupoid on the points of a semilattice."""
    n = e.size
    compose = [[a if a == b else UNDEFINED for b in range(n)] for a in range(n)]
    identity = list(range(n))
    return canonical_groupoid(
        _RawGroupoid(list(e.labels), identity, identity[:], identity[:], compose, identity[:])
    )


def semilattice_algebra(e: Semilattice) -> FiniteAlgebra:
    """The semigroup semiring B[E]: subsets of E with product {w ∧ u}."""
    one = 1 << e.greatest if e.greatest is not None else None
    return subset_semiring(f"B[E{e.size}]", e.labels, e.meet, one=one)


@dataclass(frozen=True)
class IsomorphismSearch:
    """Outcome of an exhaustive bijection search between two finite algebras."""

    isomorphic: bool
    examined: int
    mapping: Optional[Tuple[int, ...]] = None


def find_isomorphism(left: FiniteAlgebra, right: FiniteAlgebra) -> IsomorphismSearch:
    """Try every bijection between the carriers; count all of them."""
    if left.size != right.size:
        return IsomorphismSearch(False, 0)
    n = left.size
    la, lm = left.add_rows, left.mul_rows
    ra, rm = right.add_rows, right.mul_rows
    pairs = [(a, b) for a in range(n) for b in range(n)]
    examined = 0
    found = None
    for perm in itertools.permutations(range(n)):
        examined += 1
        if found is not None or perm[left.zero] != right.zero:
            continue
        if all(
            perm[la[a][b]] == ra[perm[a]][perm[b]] and perm[lm[a][b]] == rm[perm[a]][perm[b]]
            for a, b in pairs
        ):
            found = perm
    return IsomorphismSearch(found is not None, examined, found)


def semilattice_check_noniso(e: Semilattice, bound: Optional[int] = None) -> IsomorphismSearch:
    """Search for an isomorphism B[E] ≅ B^E; none exists when |E| > 1.

    Raises:
        PreconditionError: If |E| < 2.
        BoundExceededError: If |E| exceeds the semilattice bound.
    """
    if e.size < 2:
        raise PreconditionError("the semilattice must have more than one element")
    limit = bound if bound is not None else get_config().MAX_SEMILATTICE
    if e.size > limit:
        raise BoundExceededError(
            "semilattice size", e.size, limit, hint="(2^|E|)! bijections are searched"
        )
    result = find_isomorphism(semilattice_algebra(e), function_algebra(e.size))
    logger.info(f"examined {result.examined} bijections, isomorphic={result.isomorphic}")
    return result


def subset_bijection(atom_map: Sequence[int]) -> np.ndarray:
    """Extend a bijection of atoms to the bitmask-encoded subsets."""
    codes = np.arange(1 << len(atom_map), dtype=np.int64)
    image = np.zeros_like(codes)
    for a, b in enumerate(atom_map):
        image |= ((codes >> a) & 1) << b
    return image


def is_isomorphism(left: FiniteAlgebra, right: FiniteAlgebra, phi: np.ndarray) -> bool:
    """Check that the carrier bijection ``phi`` carries left's tables onto right's."""
    if left.size != right.size or len(set(phi.tolist())) != left.size:
        return False
    if phi[left.zero] != right.zero:
        return False
    grid = np.ix_(phi, phi)
    return bool(
        (phi[left.add_table] == right.add_table[grid]).all()
        and (phi[left.mul_table] == right.mul_table[grid]).all()
    )


def pair_matrix_alignment(g: FiniteGroupoid, n: int) -> List[int]:
    """Atom map sending the pair-groupoid arrow (x_i, x_j) to the matrix unit E_ij."""
    atom_map = [0] * g.size
    for i in range(n):
        for j in range(n):
            atom_map[g.index_of(f"(x{i + 1},x{j + 1})")] = i * n + j
    return atom_map


def group_alignment(g: FiniteGroupoid, group: FiniteGroup) -> List[int]:
    """Atom map sending each arrow of the one-object groupoid to its group element."""
    return [group.labels.index(label) for label in g.labels]
