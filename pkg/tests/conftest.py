import random

import pytest

from jdvtools import Graph


def make_random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p) sample with 1-indexed vertices."""
    edges = [
        (u, v) for u in range(1, n) for v in range(u + 1, n + 1) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def seeded_graph_suite(base_seed: int, count: int, n_lo: int, n_hi: int):
    """Deterministic graph stream; graph i depends only on (base_seed, i),
    so any partition of the index range regenerates identical graphs."""
    for i in range(count):
        rng = random.Random(base_seed * 1_000_003 + i)
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(0.05, 0.95)
        yield make_random_graph(rng, n, p)


@pytest.fixture
def random_graph():
    return make_random_graph
