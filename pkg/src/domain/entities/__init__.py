"""Domain entities - finite algebras, graphs, groupoids and algebra elements."""

from .cylinder import Cylinder, SteinbergElt
from .finite_algebra import AlgebraHom, CongruenceRelation, FiniteAlgebra
from .graph import Cycle, EdgeRecord, Graph
from .groupoid import FiniteGroup, FiniteGroupoid, Semilattice
from .lpa_term import LpaTerm

__all__ = [
    "AlgebraHom",
    "CongruenceRelation",
    "Cycle",
    "Cylinder",
    "EdgeRecord",
    "FiniteAlgebra",
    "FiniteGroup",
    "FiniteGroupoid",
    "Graph",
    "LpaTerm",
    "Semilattice",
    "SteinbergElt",
]
