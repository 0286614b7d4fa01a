"""Built-in graphs and finite algebras used by the suites, demos and the congruences verb."""

import re
from pathlib import Path as FilePath
from typing import Dict, Optional

from ...domain.entities.finite_algebra import FiniteAlgebra
from ...domain.entities.graph import Graph
from ...domain.entities.groupoid import chain_semilattice, cyclic_group
from ...domain.exceptions.algebra_exceptions import PreconditionError
from ...domain.services.finite_algebras import (
    boolean_algebra,
    function_algebra,
    group_semiring,
    matrix_semiring,
)
from ...domain.services.groupoids import (
    GroupSpec,
    PairSpec,
    build_groupoid,
    semilattice_algebra,
    steinberg_finite,
)
from ...infrastructure.config import Config
from ...infrastructure.serialization import load_algebra, parse_graph

GRAPH_TEXTS: Dict[str, str] = {
    "E2": "vertex v\nvertex w\nedge e v w\n",
    "R1": "vertex v\nedge e v v\n",
    "R2": "vertex v\nedge e v v\nedge f v v\n",
    "Romega": "vertex v\nbundle es v v\n",
    "E4": "vertex v\nvertex w\nedge e v w\nedge f v w\n",
    "isolated": "vertex u\nvertex v\n",
}

ROW_FINITE_GRAPHS = ("E2", "R1", "R2")
LAW_GRAPHS = ("E2", "R1", "R2", "Romega")

BUILTIN_ALGEBRAS = ("B", "B^n", "M_n", "B[Z_n]", "B[C_n]", "pair_n", "Z_n")


def shipped_graph(name: str) -> Graph:
    return parse_graph(GRAPH_TEXTS[name], name=name)


def builtin_algebra(name: str, config: Config) -> FiniteAlgebra:
    """Resolve a built-in algebra name, or read an algebra file.

    Names: ``B``, ``B^n``, ``M_n`` (or ``M_n(B)``), ``B[Z_n]`` (group
    semiring of the cyclic group), ``B[C_n]`` (semilattice algebra of the
    n-chain), ``pair_n`` and ``Z_n`` (Steinberg algebras of the pair
    groupoid and of the cyclic group).

    Raises:
        PreconditionError: For names that match nothing.
    """
    bound = config.MAX_CARRIER
    size_arg = _size_suffix(name)
    if name == "B":
        return boolean_algebra()
    if name.startswith("B^") and size_arg is not None:
        return function_algebra(size_arg, bound=bound)
    if re.fullmatch(r"M_\d+(\(B\))?", name):
        return matrix_semiring(int(re.findall(r"\d+", name)[0]), bound=bound)
    if re.fullmatch(r"B\[Z_\d+\]", name):
        n = int(re.findall(r"\d+", name)[0])
        return group_semiring(cyclic_group(n), name=name, bound=bound)
    if re.fullmatch(r"B\[C_\d+\]", name):
        return semilattice_algebra(chain_semilattice(int(re.findall(r"\d+", name)[0])))
    if re.fullmatch(r"pair_\d+", name) and size_arg is not None:
        return steinberg_finite(build_groupoid(PairSpec(size_arg)), bound=bound)
    if re.fullmatch(r"Z_\d+", name) and size_arg is not None:
        return steinberg_finite(build_groupoid(GroupSpec(cyclic_group(size_arg))), bound=bound)
    if FilePath(name).is_file():
        return load_algebra(name)
    raise PreconditionError(
        f"unknown algebra '{name}' (built-ins: {', '.join(BUILTIN_ALGEBRAS)}, or a table file)"
    )


def _size_suffix(name: str) -> Optional[int]:
    match = re.search(r"(\d+)\Z", name)
    return int(match.group(1)) if match else None
