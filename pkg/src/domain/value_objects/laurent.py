"""Laurent polynomials with Boolean coefficients."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable


@dataclass(frozen=True)
class LaurentPolyB:
    """An element of B[x, x⁻¹], stored as its set of exponents.

    Every coefficient is 0 or 1, so a polynomial is exactly the finite set of
    exponents carrying coefficient 1.
    """

    exponents: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, exponents: Iterable[int]) -> "LaurentPolyB":
        return cls(frozenset(exponents))

    @classmethod
    def monomial(cls, k: int) -> "LaurentPolyB":
        return cls(frozenset({k}))

    @property
    def is_zero(self) -> bool:
        return not self.exponents

    def __add__(self, other: "LaurentPolyB") -> "LaurentPolyB":
        return LaurentPolyB(self.exponents | other.exponents)

    def __mul__(self, other: "LaurentPolyB") -> "LaurentPolyB":
        return LaurentPolyB(frozenset(a + b for a in self.exponents for b in other.exponents))

    def __str__(self) -> str:
        if not self.exponents:
            return "0"
        terms = []
        for k in sorted(self.exponents):
            if k == 0:
                terms.append("1")
            elif k == 1:
                terms.append("x")
            else:
                terms.append(f"x^{k}")
        return " + ".join(terms)
