"""Color coding: random colorings, the colorful-path subset DP and its driver,
plus a polynomial-space inclusion-exclusion counter for colorful walks."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, PathWitness
from .report import TrialReport, trial_rng

DEFAULT_DELTA = 0.05


@dataclass(frozen=True)
class Coloring:
    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError("palette size must be positive")
        bad = [c for c in self.colors if not 1 <= c <= self.palette_size]
        if bad:
            raise ValueError(f"colors {bad} outside [1, {self.palette_size}]")

    @classmethod
    def of(cls, colors: Sequence[int], palette_size: int | None = None) -> "Coloring":
        colors = tuple(colors)
        if palette_size is None:
            palette_size = max(colors, default=1)
        return cls(palette_size, colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        """``classes()[c - 1]`` lists the vertices of color ``c``."""
        out: list[list[int]] = [[] for _ in range(self.palette_size)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out


def _check_coloring(g: Graph, phi: Coloring) -> None:
    if len(phi) != g.n:
        raise ValueError(f"coloring has {len(phi)} entries for a graph on {g.n} vertices")


def random_coloring(g: Graph, k_star: int, rng: random.Random) -> Coloring:
    if k_star < 1:
        raise ValueError("k_star must be at least 1")
    return Coloring(k_star, tuple(rng.randint(1, k_star) for _ in range(g.n)))


def is_colorful(phi: Coloring, path: Sequence[int]) -> bool:
    return len({phi[v] for v in path}) == len(path)


def default_trials(k: int, delta: float = DEFAULT_DELTA) -> int:
    return max(1, math.ceil(math.exp(k) * math.log(1 / delta)))


def colorful_path_dp(g: Graph, phi: Coloring, k: int) -> Optional[PathWitness]:
    """Find a path on ``k`` vertices whose colors are exactly ``1..k``.

    ``ends[mask]`` is the bitmask of vertices ``u`` at which some colorful path
    using exactly the colors in ``mask`` ends. Masks are processed in
    increasing numeric order, which visits every subset after its subsets.
    """
    _check_coloring(g, phi)
    if phi.palette_size != k:
        raise ValueError(f"coloring palette {phi.palette_size} != k={k}")
    if k < 1 or k > g.n:
        return None
    in_mask = [0] * g.n
    for u, v in g.arcs:
        in_mask[v] |= 1 << u
    classes = phi.classes()

    full = (1 << k) - 1
    ends = [0] * (full + 1)
    for c, members in enumerate(classes):
        ends[1 << c] = sum(1 << v for v in members)
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        acc = 0
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            prev = ends[mask ^ low]
            if not prev:
                continue
            for u in classes[low.bit_length() - 1]:
                if in_mask[u] & prev:
                    acc |= 1 << u
        ends[mask] = acc

    if not ends[full]:
        return None
    u = (ends[full] & -ends[full]).bit_length() - 1
    mask = full
    rev = [u]
    while mask & (mask - 1):
        mask ^= 1 << (phi[u] - 1)
        prev = ends[mask] & in_mask[u]
        u = (prev & -prev).bit_length() - 1
        rev.append(u)
    return tuple(reversed(rev))


def color_coding_search(
    g: Graph, k: int, trials: int | None = None, seed: int = 0
) -> tuple[bool, Optional[PathWitness], TrialReport]:
    """Repeat random k-coloring + colorful DP until a path shows up.

    Trial ``t`` draws its coloring from a generator derived from ``(seed, t)``,
    so a run with more trials replays every trial of a shorter run first.
    """
    if trials is None:
        trials = default_trials(k)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    witness = None
    run = 0
    for t in range(trials):
        run = t + 1
        if k > g.n:
            break
        phi = random_coloring(g, k, trial_rng(seed, t))
        witness = colorful_path_dp(g, phi, k)
        if witness is not None:
            break
    found = witness is not None
    report = TrialReport(
        algorithm="color-coding",
        k=k,
        seed=seed,
        trials_run=run,
        decision="YES" if found else "NO",
        witness=list(witness) if found else None,
        wall_time=time.perf_counter() - start,
    )
    return found, witness, report


def colorful_walk_count_ie(g: Graph, phi: Coloring, k: int) -> int:
    """Number of colorful k-vertex walk sequences, by inclusion-exclusion.

    For each excluded color set ``X`` the walks confined to the remaining
    colors are counted with ``C[v][j]`` = number of j-vertex walks starting at
    ``v``; only two columns of ``C`` are alive at a time.
    """
    _check_coloring(g, phi)
    if phi.palette_size != k:
        raise ValueError(f"coloring palette {phi.palette_size} != k={k}")
    if k < 1:
        raise ValueError("k must be at least 1")
    out = [g.out_neighbors(v) for v in range(g.n)]
    total = 0
    for excluded in range(1 << k):
        allowed = [not (excluded >> (phi[v] - 1)) & 1 for v in range(g.n)]
        col = [1 if allowed[v] else 0 for v in range(g.n)]
        for _ in range(k - 1):
            col = [
                sum(col[w] for w in out[v]) if allowed[v] else 0
                for v in range(g.n)
            ]
        sign = -1 if bin(excluded).count("1") & 1 else 1
        total += sign * sum(col)
    return total
