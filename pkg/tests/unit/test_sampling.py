"""Unit tests for the random generators behind the property suites."""

import random

from src.domain.entities.cylinder import SteinbergElt
from src.domain.services import cylinder_calculus as cc
from src.domain.services.graph_analysis import is_acyclic
from src.domain.services.sampling import (
    acyclic_graphs,
    random_cylinders,
    random_element,
    random_lpa_term,
    random_split,
)


class TestSampling:
    """Test reproducibility and validity of random samples."""

    def test_reproducible(self, romega):
        """The same seed gives the same element."""
        first = random_element(romega, random.Random(3))
        second = random_element(romega, random.Random(3))
        assert isinstance(first, SteinbergElt)
        assert first == second

    def test_lpa_terms_are_well_formed(self, r2):
        """Sampled monomials p q* satisfy r(p) = r(q)."""
        rng = random.Random(1)
        for _ in range(20):
            term = random_lpa_term(r2, rng)
            assert all(p.end == q.end for p, q in term.monomials)

    def test_split_keeps_the_set(self, romega, r2):
        """Splitting cylinders never changes their union."""
        rng = random.Random(5)
        for graph in (romega, r2):
            for _ in range(10):
                cylinders = random_cylinders(graph, rng)
                split = random_split(graph, rng, cylinders)
                assert cc.canonicalize(graph, split) == cc.canonicalize(graph, cylinders)

    def test_acyclic_graphs(self):
        """Every enumerated graph is acyclic and row-finite."""
        graphs = list(acyclic_graphs(max_vertices=2, max_edges=2))
        assert len(graphs) == 4
        assert all(is_acyclic(g) and g.is_row_finite for g in graphs)
