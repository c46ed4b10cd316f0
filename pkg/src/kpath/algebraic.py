"""Characteristic-2 walk polynomial: evaluation, brute-force oracle and the
randomized identity-testing decider."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from .gf2 import FieldElement, FieldSpec, field_make
from .graph import Graph, enumerate_k_paths
from .report import TrialReport, trial_rng

DEFAULT_TRIALS = 20


@dataclass(frozen=True)
class Assignment:
    """Field values for every arc variable ``x[(u, v)]`` and every
    vertex-label variable ``y[(v, label)]`` with labels ``1..k``."""

    spec: FieldSpec
    k: int
    x: dict[tuple[int, int], int]
    y: dict[tuple[int, int], int]


def random_assignment(g: Graph, k: int, spec: FieldSpec, rng: random.Random) -> Assignment:
    x = {arc: spec.random_bits(rng) for arc in sorted(g.arcs)}
    y = {(v, j): spec.random_bits(rng) for v in range(g.n) for j in range(1, k + 1)}
    return Assignment(spec, k, x, y)


def eval_px(g: Graph, k: int, X: Iterable[int], asg: Assignment) -> FieldElement:
    """Walks weighted by their arc variables times, per vertex, the sum of its
    label variables over ``X`` (all labelings ``[k] -> X``)."""
    spec = asg.spec
    mul = spec.mul
    labels = tuple(X)
    z = [0] * g.n
    for v in range(g.n):
        acc = 0
        for j in labels:
            acc ^= asg.y[v, j]
        z[v] = acc
    x = asg.x
    layer = z
    for _ in range(k - 1):
        nxt = [0] * g.n
        for w in range(g.n):
            if not z[w]:
                continue
            acc = 0
            for v in g.in_neighbors(w):
                if layer[v]:
                    acc ^= mul(x[v, w], layer[v])
            if acc:
                nxt[w] = mul(z[w], acc)
        layer = nxt
    total = 0
    for val in layer:
        total ^= val
    return FieldElement(spec, total)


def eval_p(g: Graph, k: int, asg: Assignment) -> FieldElement:
    """Sum of ``eval_px`` over every label subset; signs vanish mod 2."""
    total = 0
    for bits in range(1, 1 << k):
        X = [j + 1 for j in range(k) if bits >> j & 1]
        total ^= eval_px(g, k, X, asg).bits
    return FieldElement(asg.spec, total)


def brute_eval_p(g: Graph, k: int, asg: Assignment) -> FieldElement:
    """Direct sum over simple path sequences and bijective labelings.

    Factorial cost; meant for n <= 6, k <= 4.
    """
    spec = asg.spec
    mul = spec.mul
    _, paths = enumerate_k_paths(g, k, cap=None)
    if not g.directed and k > 1:
        paths = paths + [p[::-1] for p in paths]
    total = 0
    for path in paths:
        xs = 1
        for a, b in zip(path, path[1:]):
            xs = mul(xs, asg.x[a, b])
        perm_sum = 0
        for sigma in permutations(range(1, k + 1)):
            term = 1
            for v, j in zip(path, sigma):
                term = mul(term, asg.y[v, j])
            perm_sum ^= term
        total ^= mul(xs, perm_sum)
    return FieldElement(spec, total)


def williams_decide(
    g: Graph, k: int, trials: int = DEFAULT_TRIALS, seed: int = 0
) -> tuple[bool, TrialReport]:
    """YES on the first random point where the polynomial is nonzero."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    spec = field_make(k)
    start = time.perf_counter()
    found = False
    run = 0
    for t in range(trials):
        run = t + 1
        if k > g.n:
            break
        asg = random_assignment(g, k, spec, trial_rng(seed, t))
        if eval_p(g, k, asg):
            found = True
            break
    report = TrialReport(
        algorithm="algebraic",
        k=k,
        seed=seed,
        trials_run=run,
        decision="YES" if found else "NO",
        wall_time=time.perf_counter() - start,
    )
    return found, report
