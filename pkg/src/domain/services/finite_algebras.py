"""Semiring descriptors and constructors for concrete finite hemirings."""

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ...infrastructure.config import get_config
from ..entities.finite_algebra import FiniteAlgebra
from ..entities.groupoid import FiniteGroup
from ..exceptions.algebra_exceptions import (
    BoundExceededError,
    PreconditionError,
    UnsupportedSemiringError,
)
from ..value_objects.semiring import (
    NEG_INF,
    SemiringDescriptor,
    Tropical,
    boolean_semifield,
    integer_ring,
    natural_semiring,
    rational_field,
    tropical_semifield,
)
from ..value_objects.verdicts import CheckReport

logger = logging.getLogger(__name__)

_DESCRIPTORS: Dict[str, Callable[[], SemiringDescriptor]] = {
    "B": boolean_semifield,
    "N": natural_semiring,
    "T": tropical_semifield,
    "Z": integer_ring,
    "Q": rational_field,
}


def instantiate_semiring(name: str) -> SemiringDescriptor:
    """Get the descriptor of a built-in commutative semiring.

    Args:
        name: One of ``B``, ``N``, ``T``, ``Z`` or ``Q``.

    Returns:
        SemiringDescriptor: The descriptor.

    Raises:
        UnsupportedSemiringError: For any other name.
    """
    factory = _DESCRIPTORS.get(name)
    if factory is None:
        raise UnsupportedSemiringError(name)
    return factory()


def check_carrier_size(size: int, bound: Optional[int] = None) -> None:
    limit = get_config().carrier_bound(bound)
    if size > limit:
        raise BoundExceededError(
            "carrier size", size, limit, hint="raise --max-carrier or STEINBERG_MAX_CARRIER"
        )


def boolean_algebra() -> FiniteAlgebra:
    """B as a two-element finite algebra."""
    return FiniteAlgebra("B", ["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], zero=0, one=1)


def subset_semiring(
    name: str,
    atom_labels: Sequence[str],
    atom_product: Callable[[int, int], Optional[int]],
    one: Optional[int] = None,
    local_units: Optional[Sequence[int]] = None,
    bound: Optional[int] = None,
) -> FiniteAlgebra:
    """Build the Boolean algebra of subsets of a finite partial magma.

    Subsets are encoded as bitmasks over the atoms; addition is union and
    the product of two subsets is the set of all defined atom products.

    Args:
        name: Display name.
        atom_labels: Labels of the atoms (bit i is atom i).
        atom_product: Product of two atoms, or None when undefined.
        one: Bitmask of the multiplicative identity, if any.
        local_units: Bitmasks forming a set of local units, if known.
        bound: Carrier-size bound override.

    Returns:
        FiniteAlgebra: The subset algebra with 2^n elements.
    """
    n = len(atom_labels)
    size = 1 << n
    check_carrier_size(size, bound)
    codes = np.arange(size, dtype=np.int64)
    add_table = codes[:, None] | codes[None, :]
    mul_table = np.zeros((size, size), dtype=np.int64)
    for a in range(n):
        row = np.zeros(size, dtype=np.int64)
        for b in range(n):
            product = atom_product(a, b)
            if product is not None:
                row |= np.where((codes >> b) & 1, 1 << product, 0)
        mul_table[1 << a] = row
    # UV = (U minus its low atom)V ∪ (low atom)V; rows are filled in increasing order
    for u in range(1, size):
        low = u & -u
        if low != u:
            mul_table[u] = mul_table[u & (u - 1)] | mul_table[low]
    labels = [
        "{" + ",".join(atom_labels[i] for i in range(n) if (u >> i) & 1) + "}" for u in range(size)
    ]
    logger.debug(f"built subset semiring {name} with {size} elements")
    return FiniteAlgebra(
        name, labels, add_table, mul_table, zero=0, one=one, local_units=local_units
    )


def matrix_semiring(
    n: int, max_n: Optional[int] = None, bound: Optional[int] = None
) -> FiniteAlgebra:
    """The n×n Boolean matrix semiring M_n(B).

    Matrices are bitmasks with entry (i, j) at bit i·n + j; the product is
    the Boolean matrix product, computed row by row with numpy.

    Raises:
        BoundExceededError: If n exceeds the matrix bound or 2^(n²) the carrier bound.
    """
    if n < 1:
        raise PreconditionError(f"matrix size must be positive, got {n}")
    limit = max_n if max_n is not None else get_config().MAX_MATRIX_N
    if n > limit:
        raise BoundExceededError("matrix size", n, limit, hint="raise STEINBERG_MAX_MATRIX_N")
    entries = n * n
    size = 1 << entries
    check_carrier_size(size, bound)
    codes = np.arange(size, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(entries)[None, :]) & 1).reshape(size, n, n)
    weights = (np.int64(1) << np.arange(entries, dtype=np.int64)).reshape(n, n)
    add_table = codes[:, None] | codes[None, :]
    mul_table = np.empty((size, size), dtype=np.int64)
    for a in range(size):
        products = np.matmul(bits[a], bits) > 0
        mul_table[a] = (products * weights).sum(axis=(1, 2))
    labels = [
        "[" + ";".join("".join(str(int(x)) for x in row) for row in bits[code]) + "]"
        for code in range(size)
    ]
    one = sum(1 << (i * n + i) for i in range(n))
    return FiniteAlgebra(f"M_{n}(B)", labels, add_table, mul_table, zero=0, one=one)


def matrix_unit(n: int, i: int, j: int) -> int:
    """Carrier index of the matrix unit E_ij in ``matrix_semiring(n)``."""
    return 1 << (i * n + j)


def group_semiring(
    group: FiniteGroup, name: Optional[str] = None, bound: Optional[int] = None
) -> FiniteAlgebra:
    """The group semiring B[G]: subsets of G under union and setwise product."""
    return subset_semiring(
        name or f"B[G{group.order}]",
        group.labels,
        group.mul,
        one=1 << group.identity,
        bound=bound,
    )


def function_algebra(n: int, bound: Optional[int] = None) -> FiniteAlgebra:
    """B^n with pointwise operations; coordinate i is bit i."""
    if n < 1:
        raise PreconditionError(f"number of coordinates must be positive, got {n}")
    size = 1 << n
    check_carrier_size(size, bound)
    codes = np.arange(size, dtype=np.int64)
    labels = ["(" + ",".join(str((u >> i) & 1) for i in range(n)) + ")" for u in range(size)]
    return FiniteAlgebra(
        f"B^{n}",
        labels,
        codes[:, None] | codes[None, :],
        codes[:, None] & codes[None, :],
        zero=0,
        one=size - 1,
    )


def validate_algebra(alg: FiniteAlgebra) -> CheckReport:
    """Check every hemiring axiom on every triple.

    Work is vectorized over the last two coordinates and looped over the
    first, so memory stays quadratic in the carrier size.
    """
    n = alg.size
    A = alg.add_table
    M = alg.mul_table
    idx = np.arange(n)
    z = alg.zero

    def first(mask: np.ndarray) -> str:
        return ",".join(str(int(i)) for i in np.argwhere(mask)[0])

    if not (A == A.T).all():
        violation = f"additive commutativity at ({first(A != A.T)})"
        return CheckReport("hemiring axioms", violation, n * n)
    if not (A[z] == idx).all():
        return CheckReport("hemiring axioms", f"additive identity at ({first(A[z] != idx)})", n)
    if not ((M[z] == z).all() and (M[:, z] == z).all()):
        return CheckReport("hemiring axioms", "zero does not annihilate", n)
    if alg.one is not None and not ((M[alg.one] == idx).all() and (M[:, alg.one] == idx).all()):
        return CheckReport("hemiring axioms", "multiplicative identity fails", n)
    for a in range(n):
        checks = (
            ("additive associativity", A[A[a]] != A[a][A]),
            ("multiplicative associativity", M[M[a]] != M[a][M]),
            ("left distributivity", M[a][A] != A[M[a][:, None], M[a][None, :]]),
            ("right distributivity", M[:, a][A] != A[M[:, a][:, None], M[:, a][None, :]]),
        )
        for axiom, failures in checks:
            if failures.any():
                violation = f"{axiom} at ({a},{first(failures)})"
                return CheckReport("hemiring axioms", violation, (a + 1) * n * n)
    return CheckReport("hemiring axioms", None, n * n * n)


def natural_order_check(alg: FiniteAlgebra) -> CheckReport:
    """Check that a ≤ b ⇔ a + b = b is a partial order with monotone operations."""
    if not alg.is_additively_idempotent:
        return CheckReport("natural order", "algebra is not additively idempotent")
    n = alg.size
    A = alg.add_table
    M = alg.mul_table
    leq = A == np.arange(n)[None, :]
    if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
        return CheckReport("natural order", "antisymmetry fails", n * n)
    for c in range(n):
        if (leq[c][None, :] & leq[:, c][:, None] & ~leq).any():
            return CheckReport("natural order", f"transitivity fails through {c}", n * n)
        for name, image in (("+", A[:, c]), ("left ·", M[c]), ("right ·", M[:, c])):
            if (leq & ~leq[np.ix_(image, image)]).any():
                return CheckReport("natural order", f"{name} not monotone for c={c}", n * n)
    return CheckReport("natural order", None, n * n * n)


def tropical_sample(n: int, seed: int = 0) -> List[Tropical]:
    """A reproducible sample of ``n`` distinct tropical numbers including −∞."""
    rng = random.Random(seed)
    sample = [NEG_INF]
    seen = {NEG_INF}
    while len(sample) < n:
        value = Tropical(Fraction(rng.randint(-20, 20), rng.randint(1, 6)))
        if value not in seen:
            seen.add(value)
            sample.append(value)
    return sample


def tropical_support_relation(x: Tropical, y: Tropical) -> bool:
    """x ρ y iff x = y or x · y ≠ −∞: identifies all finite numbers, isolates −∞.

    The tropical product is the ordinary sum of the real values, so it is
    −∞ exactly when one side is −∞.
    """
    return x == y or not (x * y).is_neg_inf
