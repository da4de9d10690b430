import random

import pytest

from fuzzgraph.graphs import CrispDigraph, UndirectedGraph


def random_undirected(rng: random.Random, max_n: int = 7, p: float | None = None) -> UndirectedGraph:
    n = rng.randint(1, max_n)
    vertices = [f"v{i}" for i in range(n)]
    prob = rng.uniform(0.2, 0.8) if p is None else p
    edges = [
        (vertices[i], vertices[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < prob
    ]
    return UndirectedGraph.build(edges, vertices=vertices)


def random_digraph(rng: random.Random, max_n: int = 8) -> CrispDigraph:
    """Random digraph without isolated vertices (so it round-trips CSV)."""
    n = rng.randint(2, max_n)
    names = [f"n{i}" for i in range(n)]
    arcs = {
        (names[i], names[j])
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < 0.35
    }
    if not arcs:
        arcs = {(names[0], names[1])}
    return CrispDigraph.build(arcs)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
