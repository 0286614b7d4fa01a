"""Random elements and exhaustive small-graph families for the property checks."""

import itertools
import random
from typing import Iterator, List

from ..entities.cylinder import Cylinder, SteinbergElt
from ..entities.graph import EdgeRecord, Graph
from ..entities.lpa_term import LpaTerm
from ..value_objects.paths import EdgeRef, Path
from . import cylinder_calculus as cc


def _random_ref(
    rng: random.Random, refs: List[EdgeRef], bundle_ids: List[str], span: int
) -> EdgeRef:
    choices = len(refs) + len(bundle_ids)
    pick = rng.randrange(choices)
    if pick < len(refs):
        return refs[pick]
    return EdgeRef(bundle_ids[pick - len(refs)], rng.randrange(span))


def random_forward_path(
    g: Graph, rng: random.Random, start: str, max_length: int, span: int = 3
) -> Path:
    path = Path.vertex(start)
    for _ in range(rng.randint(0, max_length)):
        refs = list(g.out_edges(path.end))
        bundle_ids = [b.id for b in g.out_bundles(path.end)]
        if not refs and not bundle_ids:
            break
        ref = _random_ref(rng, refs, bundle_ids, span)
        path = path.extend((ref,), g.range_of(ref))
    return path


def random_backward_path(
    g: Graph, rng: random.Random, end: str, max_length: int, span: int = 3
) -> Path:
    """A random path ending at ``end``, grown backwards."""
    path = Path.vertex(end)
    for _ in range(rng.randint(0, max_length)):
        refs = [EdgeRef(e.id) for e in g.edges if e.range == path.start]
        bundle_ids = [b.id for b in g.bundles if b.range == path.start]
        if not refs and not bundle_ids:
            break
        ref = _random_ref(rng, refs, bundle_ids, span)
        path = Path(g.source_of(ref), (ref,) + path.edges, path.end)
    return path


def random_cylinder(g: Graph, rng: random.Random, max_length: int = 2, span: int = 3) -> Cylinder:
    """A random Z(α, β, F); F is only nonempty at infinite emitters."""
    start = rng.choice(g.sorted_vertices)
    alpha = random_forward_path(g, rng, start, max_length, span)
    beta = random_backward_path(g, rng, alpha.end, max_length, span)
    excluded = set()
    u = alpha.end
    if g.is_infinite_emitter(u) and rng.random() < 0.5:
        candidates = list(g.out_edges(u)) + [
            EdgeRef(b.id, i) for b in g.out_bundles(u) for i in range(span)
        ]
        excluded = set(rng.sample(candidates, rng.randint(1, min(2, len(candidates)))))
    return Cylinder(alpha, beta, frozenset(excluded))


def random_cylinders(
    g: Graph, rng: random.Random, max_terms: int = 3, max_length: int = 2
) -> List[Cylinder]:
    return [random_cylinder(g, rng, max_length) for _ in range(rng.randint(0, max_terms))]


def random_element(
    g: Graph, rng: random.Random, max_terms: int = 3, max_length: int = 2
) -> SteinbergElt:
    return cc.canonicalize(g, random_cylinders(g, rng, max_terms, max_length))


def random_lpa_term(
    g: Graph, rng: random.Random, max_terms: int = 3, max_length: int = 2
) -> LpaTerm:
    monomials = []
    for _ in range(rng.randint(0, max_terms)):
        start = rng.choice(g.sorted_vertices)
        p = random_forward_path(g, rng, start, max_length)
        q = random_backward_path(g, rng, p.end, max_length)
        monomials.append((p, q))
    return LpaTerm(g, monomials)


def random_split(
    g: Graph, rng: random.Random, cylinders: List[Cylinder], rounds: int = 2
) -> List[Cylinder]:
    """Replace random cylinders by equivalent finer families."""
    current = list(cylinders)
    for _ in range(rounds):
        if not current:
            break
        i = rng.randrange(len(current))
        current[i : i + 1] = cc.expand_cylinder(g, current[i])
    rng.shuffle(current)
    return current


def acyclic_graphs(max_vertices: int = 3, max_edges: int = 3) -> Iterator[Graph]:
    """Every acyclic bundle-free graph up to the given size.

    Vertices are v0 < v1 < ... and edges only go upwards, which covers every
    acyclic graph up to relabelling; parallel edges are allowed.
    """
    for n in range(1, max_vertices + 1):
        vertices = [f"v{i}" for i in range(n)]
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for m in range(max_edges + 1):
            for chosen in itertools.combinations_with_replacement(slots, m):
                edges = [
                    EdgeRecord(f"e{k}", vertices[i], vertices[j]) for k, (i, j) in enumerate(chosen)
                ]
                shape = ",".join(f"{i}{j}" for i, j in chosen)
                yield Graph(vertices, edges, name=f"acyclic{n}:{m}:{shape}")
