"""Result value objects returned by the decision procedures and checkers."""

from dataclasses import dataclass, field
from typing import Any, Optional, Tuple


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive or sampled law check.

    ``violation`` is None when the check passed; ``examined`` counts the
    instances (pairs, triples, bijections...) that were looked at.
    """

    name: str
    violation: Optional[str] = None
    examined: int = 0

    @property
    def ok(self) -> bool:
        return self.violation is None

    def describe(self) -> str:
        return "no violation found" if self.ok else f"violation: {self.violation}"


@dataclass(frozen=True)
class SimplenessVerdict:
    """Verdict of a congruence-simpleness decision.

    ``failed`` lists the numbers of the failed theorem conditions (empty when
    simple); ``witness`` optionally carries a proper nontrivial congruence.
    """

    simple: bool
    failed: Tuple[int, ...] = ()
    reasons: Tuple[str, ...] = ()
    witness: Optional[Any] = None

    @property
    def reason_code(self) -> str:
        if self.simple:
            return "conditions(1,2,3)"
        return "failed(" + ",".join(str(i) for i in self.failed) + ")"


@dataclass(frozen=True)
class UniquenessVerdict:
    """Verdict of a uniqueness-theorem check on a homomorphism out of L_B(E).

    ``injective`` is None when the bounded search could not decide.
    ``condition`` names the violated condition (1 or 2) on failure.
    """

    injective: Optional[bool]
    condition: Optional[int] = None
    reason: str = ""
    witness: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def label(self) -> str:
        if self.injective is None:
            return "inconclusive"
        return "injective" if self.injective else "not injective"
