"""Pytest configuration and shared fixtures."""

import pytest

from src.application.services.catalog import GRAPH_TEXTS, shipped_graph
from src.domain.services.finite_algebras import boolean_algebra, function_algebra, matrix_semiring
from src.infrastructure.config import Config, set_config


@pytest.fixture(autouse=True)
def fresh_config():
    """Reload settings from the environment around every test."""
    set_config(None)
    yield
    set_config(None)


@pytest.fixture
def config():
    """Provide default settings."""
    return Config()


@pytest.fixture
def e2():
    """Two vertices joined by one edge e: v -> w."""
    return shipped_graph("E2")


@pytest.fixture
def r1():
    """One vertex with a single loop e."""
    return shipped_graph("R1")


@pytest.fixture
def r2():
    """One vertex with two loops e and f."""
    return shipped_graph("R2")


@pytest.fixture
def romega():
    """One vertex with infinitely many loops es[0], es[1], ..."""
    return shipped_graph("Romega")


@pytest.fixture
def e4():
    """Two parallel edges e, f: v -> w."""
    return shipped_graph("E4")


@pytest.fixture
def isolated():
    """Two vertices and no edges."""
    return shipped_graph("isolated")


@pytest.fixture
def b_alg():
    """The Boolean semifield as a finite algebra."""
    return boolean_algebra()


@pytest.fixture
def b2_alg():
    """B^2 with pointwise operations."""
    return function_algebra(2)


@pytest.fixture
def m2_alg():
    """The 2x2 Boolean matrix semiring."""
    return matrix_semiring(2)


@pytest.fixture
def graph_file(tmp_path):
    """Factory writing one of the shipped graphs to a .graph file."""

    def _write(name: str) -> str:
        path = tmp_path / f"{name}.graph"
        path.write_text(GRAPH_TEXTS[name], encoding="utf-8")
        return str(path)

    return _write
