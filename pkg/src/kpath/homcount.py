"""Path counting through homomorphisms and inclusion-exclusion."""

from __future__ import annotations

import math
import time
from itertools import combinations

from .color_coding import Coloring, random_coloring
from .graph import Graph
from .report import TrialReport, trial_rng

HUFFNER_BASE = 1.752
PALETTE_FACTOR = 1.3


def _hom_path_within(g: Graph, k: int, allowed: list[bool]) -> int:
    # walks of k vertices confined to the allowed vertices
    walks = [1 if a else 0 for a in allowed]
    for _ in range(k - 1):
        walks = [
            sum(walks[u] for u in g.in_neighbors(v)) if allowed[v] else 0
            for v in range(g.n)
        ]
    return sum(walks)


def hom_path(g: Graph, k: int) -> int:
    """Hom(P_k, G): the number of k-vertex walk sequences."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _hom_path_within(g, k, [True] * g.n)


def inj_path(g: Graph, k: int) -> int:
    """Inj(P_k, G) = sum over |Y| <= k of (-1)^(k-|Y|) C(n-|Y|, k-|Y|) Hom(P_k, G[Y])."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if k > n:
        return 0
    total = 0
    for size in range(1, k + 1):
        weight = (-1) ** (k - size) * math.comb(n - size, k - size)
        for Y in combinations(range(n), size):
            allowed = [False] * n
            for v in Y:
                allowed[v] = True
            total += weight * _hom_path_within(g, k, allowed)
    return total


def aut_path(k: int) -> int:
    return 1 if k == 1 else 2


def sub_path(g: Graph, k: int) -> int:
    """Number of k-vertex path subgraphs. For directed graphs no reversal
    symmetry exists, so this is Inj itself."""
    inj = inj_path(g, k)
    if g.directed:
        return inj
    q, r = divmod(inj, aut_path(k))
    assert r == 0, "Inj(P_k, G) must be divisible by Aut(P_k)"
    return q


def strip_monochromatic(g: Graph, phi: Coloring) -> Graph:
    if len(phi) != g.n:
        raise ValueError("coloring does not cover the graph")
    return Graph(g.n, g.directed, frozenset((u, v) for u, v in g.arcs if phi[u] != phi[v]))


def col_inj_sum(g: Graph, phi: Coloring, k: int) -> int:
    """The colorful inclusion-exclusion sum evaluated on ``g`` as given
    (no monochromatic stripping)."""
    k_star = phi.palette_size
    if k < 1:
        raise ValueError("k must be at least 1")
    if k_star < k:
        raise ValueError(f"palette size {k_star} smaller than k={k}")
    total = 0
    for size in range(0, k + 1):
        weight = (-1) ** (k - size) * math.comb(k_star - size, k - size)
        for I in combinations(range(1, k_star + 1), size):
            chosen = set(I)
            allowed = [phi[v] in chosen for v in range(g.n)]
            total += weight * _hom_path_within(g, k, allowed)
    return total


def col_inj(g: Graph, phi: Coloring, k: int) -> int:
    """Colorful injective homomorphisms of P_k into ``g`` under ``phi``."""
    return col_inj_sum(strip_monochromatic(g, phi), phi, k)


def count_palette(k: int) -> int:
    return math.ceil(PALETTE_FACTOR * k)


def default_count_trials(k: int, delta: float = 0.05) -> int:
    return max(1, math.ceil(HUFFNER_BASE**k * math.log(1 / delta)))


def randomized_count_search(
    g: Graph, k: int, trials: int | None = None, seed: int = 0
) -> tuple[bool, TrialReport]:
    if trials is None:
        trials = default_count_trials(k)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    k_star = count_palette(k)
    found = False
    run = 0
    value = 0
    for t in range(trials):
        run = t + 1
        if k > g.n:
            break
        phi = random_coloring(g, k_star, trial_rng(seed, t))
        value = col_inj(g, phi, k)
        if value > 0:
            found = True
            break
    report = TrialReport(
        algorithm="count-colorful",
        k=k,
        seed=seed,
        trials_run=run,
        decision="YES" if found else "NO",
        count=value if found else None,
        wall_time=time.perf_counter() - start,
    )
    return found, report
