"""Cross-engine verification harness and scaling benchmark."""

from __future__ import annotations

import json
import random
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, TextIO

from . import algebraic, color_coding, divide_color, homcount
from .color_coding import Coloring, is_colorful
from .generators import complete_graph, corpus, path_graph, path_plus_noise
from .gf2 import field_make
from .graph import Graph, enumerate_k_paths, find_k_path, is_path_witness
from .report import TrialReport, derive_seed

INVARIANTS = (
    "sub_path equals dfs count",
    "colorful IE equals brute colorful count",
    "colorful DP agrees with colorful IE",
    "col_inj equals brute colorful injections",
    "eval_p equals brute_eval_p",
    "divide-color entries are real paths",
    "no YES on no-instances",
    "YES witnesses are k-paths",
)

# eval_p/brute_eval_p is checked only where the factorial oracle is cheap
ALGEBRAIC_MAX_N = 5
ALGEBRAIC_MAX_K = 4


def default_engines() -> dict[str, Callable]:
    return {
        "enumerate_k_paths": lambda g, k: enumerate_k_paths(g, k, cap=None),
        "sub_path": homcount.sub_path,
        "col_inj": homcount.col_inj,
        "colorful_walk_count_ie": color_coding.colorful_walk_count_ie,
        "colorful_path_dp": color_coding.colorful_path_dp,
        "eval_p": algebraic.eval_p,
        "brute_eval_p": algebraic.brute_eval_p,
        "improved_colors_paths": divide_color.improved_colors_paths,
        "color_coding_search": color_coding.color_coding_search,
        "dc_search": divide_color.dc_search,
        "randomized_count_search": homcount.randomized_count_search,
        "williams_decide": algebraic.williams_decide,
    }


@dataclass
class Failure:
    invariant: str
    graph: Graph
    k: int
    detail: str

    def dump(self) -> str:
        return (
            f"counterexample for [{self.invariant}] at k={self.k}: {self.detail}\n"
            f"{self.graph.to_text()}"
        )


@dataclass
class VerifyResult:
    checks: dict[str, int] = field(default_factory=lambda: {name: 0 for name in INVARIANTS})
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed(self, name: str) -> bool:
        return any(f.invariant == name for f in self.failures)


def path_sequences(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Every simple k-path as a vertex sequence, both directions for undirected graphs."""
    _, paths = enumerate_k_paths(g, k, cap=None)
    if not g.directed and k > 1:
        paths = paths + [p[::-1] for p in paths]
    return paths


def brute_colorful_sequences(g: Graph, phi: Coloring, k: int) -> int:
    return sum(1 for p in path_sequences(g, k) if is_colorful(phi, p))


def endpoint_pairs(g: Graph, k: int) -> set[tuple[int, int]]:
    return {(p[0], p[-1]) for p in path_sequences(g, k)}


def check_graph(
    g: Graph,
    rng: random.Random,
    result: VerifyResult,
    engines: dict[str, Callable],
    decide_seed: int,
) -> None:
    def record(name: str, ok: bool, k: int, detail: str = "") -> None:
        result.checks[name] += 1
        if not ok:
            result.failures.append(Failure(name, g, k, detail))

    for k in range(1, g.n + 1):
        count, _ = engines["enumerate_k_paths"](g, k)
        sub = engines["sub_path"](g, k)
        record(INVARIANTS[0], sub == count, k, f"sub_path={sub}, dfs={count}")

        phi = color_coding.random_coloring(g, k, rng)
        ie = engines["colorful_walk_count_ie"](g, phi, k)
        brute = brute_colorful_sequences(g, phi, k)
        record(INVARIANTS[1], ie == brute, k, f"colors={list(phi.colors)}, ie={ie}, brute={brute}")

        w = engines["colorful_path_dp"](g, phi, k)
        agree = (w is not None) == (ie > 0)
        if w is not None:
            agree = agree and is_path_witness(g, w, k) and is_colorful(phi, w)
        record(INVARIANTS[2], agree, k, f"colors={list(phi.colors)}, witness={w}, ie={ie}")

        psi = color_coding.random_coloring(g, homcount.count_palette(k), rng)
        ci = engines["col_inj"](g, psi, k)
        ci_brute = brute_colorful_sequences(g, psi, k)
        record(INVARIANTS[3], ci == ci_brute, k, f"colors={list(psi.colors)}, col_inj={ci}, brute={ci_brute}")

        if g.n <= ALGEBRAIC_MAX_N and k <= ALGEBRAIC_MAX_K:
            spec = field_make(k)
            for _ in range(2):
                asg = algebraic.random_assignment(g, k, spec, rng)
                a, b = engines["eval_p"](g, k, asg), engines["brute_eval_p"](g, k, asg)
                record(INVARIANTS[4], a == b, k, f"eval_p={a}, brute={b}")

        M = engines["improved_colors_paths"](g, range(g.n), k, k, rng)
        real = endpoint_pairs(g, k) if k > 1 else {(v, v) for v in range(g.n)}
        bogus = M.ones() - real
        record(INVARIANTS[5], not bogus, k, f"unconfirmed entries {sorted(bogus)}")

        reports: list[TrialReport] = [
            engines["color_coding_search"](g, k, 5, decide_seed)[2],
            engines["dc_search"](g, k, decide_seed)[1],
            engines["randomized_count_search"](g, k, 3, decide_seed)[1],
            engines["williams_decide"](g, k, 3, decide_seed)[1],
        ]
        if count == 0:
            yes = [r.algorithm for r in reports if r.yes]
            record(INVARIANTS[6], not yes, k, f"YES from {yes}")
        for r in reports:
            if r.witness is not None:
                record(INVARIANTS[7], is_path_witness(g, r.witness, k), k, f"{r.algorithm} witness {r.witness}")


def run_verify(
    max_n: int = 7,
    graphs: int = 200,
    seed: int = 0,
    engines: dict[str, Callable] | None = None,
    out: TextIO | None = None,
    directed_share: float = 0.1,
) -> VerifyResult:
    merged = default_engines()
    if engines:
        merged.update(engines)
    rng = random.Random(seed)
    result = VerifyResult()
    for i, (_, g) in enumerate(corpus(graphs, max_n, rng, directed_share)):
        check_graph(g, random.Random(derive_seed(seed, i)), result, merged, derive_seed(seed, i, 1))
    if out is not None:
        for name in INVARIANTS:
            status = "FAIL" if result.failed(name) else "pass"
            print(f"{status}  {name}  ({result.checks[name]} checks)", file=out)
        if result.failures:
            print(result.failures[0].dump(), file=out, end="")
    return result


# ---------------------------------------------------------------- benchmark

BENCH_ENGINES = ("color-coding", "algebraic", "count-colorful", "divide-color")
# engines whose cost outgrows desk scale are benchmarked only up to this k
BENCH_K_CAP = {"count-colorful": 7, "divide-color": 6}
FAMILIES = ("path", "random", "complete")


def bench_instance(family: str, k: int, rng: random.Random) -> Graph:
    if family == "path":
        return path_graph(k)
    if family == "random":
        return path_plus_noise(k + 2, k, rng, p=0.3)
    if family == "complete":
        return complete_graph(k)
    raise ValueError(f"unknown family {family!r}")


def run_engine(name: str, g: Graph, k: int, seed: int) -> TrialReport:
    if name == "color-coding":
        return color_coding.color_coding_search(g, k, seed=seed)[2]
    if name == "algebraic":
        return algebraic.williams_decide(g, k, seed=seed)[1]
    if name == "count-colorful":
        return homcount.randomized_count_search(g, k, seed=seed)[1]
    if name == "divide-color":
        return divide_color.dc_search(g, k, seed=seed)[1]
    if name == "dfs":
        start = time.perf_counter()
        w = find_k_path(g, k)
        return TrialReport(
            "dfs", k, seed, 1, "YES" if w else "NO",
            witness=list(w) if w else None, wall_time=time.perf_counter() - start,
        )
    raise ValueError(f"unknown engine {name!r}")


def bench_records(
    kmax: int, family: str, reps: int, seed: int, engines: Iterable[str] = BENCH_ENGINES
) -> Iterable[dict]:
    engines = list(engines)
    for k in range(2, kmax + 1):
        for rep in range(reps):
            g = bench_instance(family, k, random.Random(derive_seed(seed, k, rep)))
            for e_idx, name in enumerate(engines):
                if k > BENCH_K_CAP.get(name, kmax):
                    continue
                report = run_engine(name, g, k, derive_seed(seed, k, rep, e_idx + 1))
                record = report.to_dict()
                record.update(n=g.n, m=g.m, family=family, rep=rep)
                yield record


def growth_factors(records: Iterable[dict]) -> dict[str, float]:
    """Median over k of t(k+1)/t(k), where t(k) is the mean wall time at k.

    The mean, not the median, aggregates repetitions: trial counts of the
    repeat-until-found drivers are heavy-tailed and the growth claims are
    about expected running time.
    """
    times: dict[str, dict[int, list[float]]] = {}
    for r in records:
        times.setdefault(r["algorithm"], {}).setdefault(r["k"], []).append(r["wall_time"])
    out = {}
    for name, by_k in times.items():
        ks = sorted(by_k)
        mean = [statistics.fmean(by_k[k]) for k in ks]
        ratios = [b / a for a, b in zip(mean, mean[1:]) if a > 0]
        if ratios:
            out[name] = statistics.median(ratios)
    return out


def run_bench(
    kmax: int, family: str, reps: int, seed: int, out_path: str,
    engines: Iterable[str] = BENCH_ENGINES, log: TextIO | None = None,
) -> dict[str, float]:
    records = []
    with open(out_path, "a") as fh:
        for record in bench_records(kmax, family, reps, seed, engines):
            fh.write(json.dumps(record, separators=(",", ":")) + "\n")
            fh.flush()
            records.append(record)
    factors = growth_factors(records)
    if log is not None:
        for name, f in sorted(factors.items(), key=lambda kv: kv[1]):
            print(f"{name}: growth factor {f:.2f}", file=log)
    return factors
