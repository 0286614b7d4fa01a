"""Unit tests for value objects."""

from fractions import Fraction

import pytest

from src.domain.exceptions import UnsupportedSemiringError
from src.domain.services.finite_algebras import instantiate_semiring
from src.domain.value_objects.laurent import LaurentPolyB
from src.domain.value_objects.paths import EdgeRef, Path
from src.domain.value_objects.semiring import NEG_INF, Tropical
from src.domain.value_objects.verdicts import CheckReport, SimplenessVerdict, UniquenessVerdict


class TestTropical:
    """Test exact tropical numbers."""

    def test_addition_is_max(self):
        """Tropical addition takes the larger value."""
        assert Tropical.of(3) + Tropical.of(Fraction(1, 2)) == Tropical.of(3)

    def test_multiplication_is_sum(self):
        """Tropical multiplication adds the values."""
        assert Tropical.of(3) * Tropical.of(-5) == Tropical.of(-2)

    def test_neg_inf_is_zero(self):
        """-inf is neutral for addition and absorbing for multiplication."""
        x = Tropical.of("7/3")
        assert x + NEG_INF == x
        assert x * NEG_INF == NEG_INF

    def test_of_accepts_strings(self):
        """'-inf' and fractions parse."""
        assert Tropical.of("-inf").is_neg_inf
        assert Tropical.of("1/2").value == Fraction(1, 2)

    def test_str(self):
        """Printing uses -inf and exact fractions."""
        assert str(NEG_INF) == "-inf"
        assert str(Tropical.of(Fraction(3, 4))) == "3/4"


class TestSemiringDescriptors:
    """Test the built-in commutative semirings."""

    @pytest.mark.parametrize(
        "name,samples",
        [
            ("B", [0, 1]),
            ("N", [0, 1, 2, 5]),
            ("Z", [-3, 0, 1, 4]),
            ("Q", [Fraction(-1, 2), Fraction(0), Fraction(1), Fraction(3)]),
            ("T", [NEG_INF, Tropical.of(0), Tropical.of(-2), Tropical.of("5/2")]),
        ],
    )
    def test_axioms_hold_on_samples(self, name, samples):
        """Every descriptor satisfies the semiring axioms on a sample."""
        assert instantiate_semiring(name).axiom_violation(samples) is None

    def test_flags(self):
        """Only B is Boolean, only Q is a field."""
        assert instantiate_semiring("B").is_boolean
        assert instantiate_semiring("Q").is_field
        assert not instantiate_semiring("T").is_field
        assert instantiate_semiring("T").additively_idempotent

    def test_unknown_name(self):
        """Unknown names are rejected."""
        with pytest.raises(UnsupportedSemiringError):
            instantiate_semiring("R")


class TestLaurentPolyB:
    """Test Laurent polynomials over B."""

    def test_addition_is_union(self):
        """Sums keep each exponent once."""
        p = LaurentPolyB.of([0, 1]) + LaurentPolyB.of([1, -2])
        assert p.exponents == frozenset({-2, 0, 1})

    def test_multiplication(self):
        """(1 + x)(1 + x^-1) = x^-1 + 1 + x over B."""
        p = LaurentPolyB.of([0, 1]) * LaurentPolyB.of([0, -1])
        assert p == LaurentPolyB.of([-1, 0, 1])

    def test_str(self):
        """Terms print in increasing degree."""
        assert str(LaurentPolyB.of([2, 0, -1, 1])) == "x^-1 + 1 + x + x^2"
        assert str(LaurentPolyB()) == "0"


class TestPaths:
    """Test edge references and paths."""

    def test_edge_ref_str(self):
        """Bundle members print with their index."""
        assert str(EdgeRef("e")) == "e"
        assert str(EdgeRef("es", 3)) == "es[3]"

    def test_prefix_and_suffix(self):
        """Prefixes are checked edge by edge."""
        e, f = EdgeRef("e"), EdgeRef("f")
        short = Path("v", (e,), "v")
        long = Path("v", (e, f), "v")

        assert short.is_prefix_of(long)
        assert not long.is_prefix_of(short)
        assert long.suffix_after(short) == (f,)

    def test_vertex_path(self):
        """A vertex is a path of length 0 printed as its id."""
        path = Path.vertex("v")
        assert path.is_vertex
        assert len(path) == 0
        assert str(path) == "v"


class TestVerdicts:
    """Test verdict value objects."""

    def test_reason_codes(self):
        """Simple verdicts cite all three conditions, others the failed ones."""
        assert SimplenessVerdict(simple=True).reason_code == "conditions(1,2,3)"
        assert SimplenessVerdict(simple=False, failed=(2, 3)).reason_code == "failed(2,3)"

    def test_check_report(self):
        """A report without violation is ok."""
        assert CheckReport("x").ok
        assert CheckReport("x", "broken").describe() == "violation: broken"

    def test_uniqueness_labels(self):
        """Undecided verdicts are inconclusive."""
        assert UniquenessVerdict(injective=None).label == "inconclusive"
        assert UniquenessVerdict(injective=False).label == "not injective"
