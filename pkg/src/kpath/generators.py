"""Small graph families for tests, the verification harness and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph

ER_EDGE_PROBABILITY = 0.3


def path_graph(n: int, directed: bool = False) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], directed)


def cycle_graph(n: int, directed: bool = False) -> Graph:
    if n < 3:
        return path_graph(n, directed)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], directed)


def complete_graph(n: int, directed: bool = False) -> Graph:
    if directed:
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(n) if u != v], True)
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def empty_graph(n: int, directed: bool = False) -> Graph:
    return Graph(n, directed, frozenset())


def erdos_renyi(n: int, rng: random.Random, p: float = ER_EDGE_PROBABILITY, directed: bool = False) -> Graph:
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [e for e in pairs if rng.random() < p], directed)


def path_plus_noise(n: int, k: int, rng: random.Random, p: float = 0.1) -> Graph:
    """A k-vertex path planted on a random subset of n vertices, plus random
    extra edges with probability ``p``."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted(e)) for e in zip(order[: k - 1], order[1:k])}
    for e in combinations(range(n), 2):
        if rng.random() < p:
            edges.add(e)
    return Graph.from_edges(n, sorted(edges))


def corpus(count: int, max_n: int, rng: random.Random, directed_share: float = 0.0) -> list[tuple[str, Graph]]:
    """Structured families for every n <= max_n, topped up with random
    graphs until ``count`` graphs are present."""
    out: list[tuple[str, Graph]] = []
    for n in range(1, max_n + 1):
        out.append((f"path{n}", path_graph(n)))
        out.append((f"cycle{n}", cycle_graph(n)))
        out.append((f"complete{n}", complete_graph(n)))
    i = 0
    while len(out) < count:
        n = rng.randint(1, max_n)
        directed = rng.random() < directed_share
        out.append((f"er{i}{'d' if directed else ''}", erdos_renyi(n, rng, directed=directed)))
        i += 1
    return out
