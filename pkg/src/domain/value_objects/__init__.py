"""Value objects for the domain model."""

from .laurent import LaurentPolyB
from .paths import EdgeRef, Path
from .semiring import ElementDomain, SemiringDescriptor, Tropical
from .verdicts import CheckReport, SimplenessVerdict, UniquenessVerdict

__all__ = [
    "CheckReport",
    "EdgeRef",
    "ElementDomain",
    "LaurentPolyB",
    "Path",
    "SemiringDescriptor",
    "SimplenessVerdict",
    "Tropical",
    "UniquenessVerdict",
]
