"""Commutative semiring descriptors and exact tropical numbers."""

import operator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]


class ElementDomain(str, Enum):
    """Kind of element a semiring descriptor works with."""

    BOOLEAN = "boolean"
    NATURAL = "natural"
    TROPICAL_RATIONAL = "tropical-rational"
    INTEGER_RING = "integer-ring"
    RATIONAL_FIELD = "rational-field"


@dataclass(frozen=True, order=False)
class Tropical:
    """Exact element of the tropical semifield (Q ∪ {−∞}, max, +).

    ``value`` is None for −∞. Addition is max, multiplication is ordinary
    addition with −∞ absorbing.
    """

    value: Optional[Fraction] = None

    def __post_init__(self):
        """Normalize finite values to Fraction."""
        if self.value is not None and not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def of(cls, value: Any) -> "Tropical":
        """Create a tropical number from an int, Fraction, string or None.

        Args:
            value: The finite value, ``None`` or the string ``"-inf"``.

        Returns:
            Tropical: The tropical number.
        """
        if value is None or value == "-inf":
            return NEG_INF
        return cls(Fraction(value))

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __add__(self, other: "Tropical") -> "Tropical":
        if self.value is None:
            return other
        if other.value is None:
            return self
        return self if self.value >= other.value else other

    def __mul__(self, other: "Tropical") -> "Tropical":
        if self.value is None or other.value is None:
            return NEG_INF
        return Tropical(self.value + other.value)

    def __str__(self) -> str:
        return "-inf" if self.value is None else str(self.value)


NEG_INF = Tropical(None)


@dataclass(frozen=True)
class SemiringDescriptor:
    """A commutative semiring given by its operations on Python values.

    Descriptors describe possibly infinite semirings; they are only ever
    checked on samples, never exhaustively.
    """

    name: str
    domain: ElementDomain
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any] = field(compare=False)
    mul: Callable[[Any, Any], Any] = field(compare=False)
    additively_idempotent: bool = False
    is_field: bool = False
    is_boolean: bool = False

    def sum(self, values: Sequence[Any]) -> Any:
        """Add up a sequence of elements, starting from zero."""
        total = self.zero
        for value in values:
            total = self.add(total, value)
        return total

    def axiom_violation(self, samples: Sequence[Any]) -> Optional[Tuple[str, Tuple[Any, ...]]]:
        """Find the first semiring axiom failing on the sampled elements.

        Args:
            samples: Elements to check on (all pairs and triples are tried).

        Returns:
            Optional[Tuple[str, Tuple]]: Axiom name and offending elements,
            or None when every sampled instance holds.
        """
        add, mul = self.add, self.mul
        for a in samples:
            if add(a, self.zero) != a:
                return "additive identity", (a,)
            if mul(a, self.one) != a or mul(self.one, a) != a:
                return "multiplicative identity", (a,)
            if mul(a, self.zero) != self.zero or mul(self.zero, a) != self.zero:
                return "zero annihilates", (a,)
            if self.additively_idempotent and add(a, a) != a:
                return "additive idempotency", (a,)
        for a in samples:
            for b in samples:
                if add(a, b) != add(b, a):
                    return "additive commutativity", (a, b)
                if mul(a, b) != mul(b, a):
                    return "multiplicative commutativity", (a, b)
                for c in samples:
                    if add(add(a, b), c) != add(a, add(b, c)):
                        return "additive associativity", (a, b, c)
                    if mul(mul(a, b), c) != mul(a, mul(b, c)):
                        return "multiplicative associativity", (a, b, c)
                    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                        return "left distributivity", (a, b, c)
                    if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
                        return "right distributivity", (a, b, c)
        if not self.additively_idempotent and all(add(a, a) == a for a in samples):
            return "idempotency flag", tuple(samples)
        return None


def boolean_semifield() -> SemiringDescriptor:
    """The two-element Boolean semifield B = ({0, 1}, ∨, ∧)."""
    return SemiringDescriptor(
        name="B",
        domain=ElementDomain.BOOLEAN,
        zero=0,
        one=1,
        add=lambda a, b: a | b,
        mul=lambda a, b: a & b,
        additively_idempotent=True,
        is_boolean=True,
    )


def natural_semiring() -> SemiringDescriptor:
    return SemiringDescriptor(
        name="N",
        domain=ElementDomain.NATURAL,
        zero=0,
        one=1,
        add=operator.add,
        mul=operator.mul,
    )


def tropical_semifield() -> SemiringDescriptor:
    """The tropical semifield T over exact rationals with −∞ as zero."""
    return SemiringDescriptor(
        name="T",
        domain=ElementDomain.TROPICAL_RATIONAL,
        zero=NEG_INF,
        one=Tropical(Fraction(0)),
        add=operator.add,
        mul=operator.mul,
        additively_idempotent=True,
    )


def integer_ring() -> SemiringDescriptor:
    return SemiringDescriptor(
        name="Z",
        domain=ElementDomain.INTEGER_RING,
        zero=0,
        one=1,
        add=operator.add,
        mul=operator.mul,
    )


def rational_field() -> SemiringDescriptor:
    return SemiringDescriptor(
        name="Q",
        domain=ElementDomain.RATIONAL_FIELD,
        zero=Fraction(0),
        one=Fraction(1),
        add=operator.add,
        mul=operator.mul,
        is_field=True,
    )
