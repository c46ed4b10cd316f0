"""Graph representation, edge-list parsing and the exhaustive path oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

PathWitness = tuple[int, ...]


class GraphParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Immutable graph on vertices ``0..n-1``.

    Undirected graphs store both orientations of every edge, so ``arcs`` is
    always a set of ordered pairs and the engines never branch on direction.
    """

    n: int
    directed: bool
    arcs: frozenset[tuple[int, int]]
    _out: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _in: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        out: list[list[int]] = [[] for _ in range(self.n)]
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not self.directed and (v, u) not in self.arcs:
                raise ValueError(f"undirected graph missing reverse of ({u}, {v})")
            out[u].append(v)
            inn[v].append(u)
        object.__setattr__(self, "_out", tuple(tuple(sorted(a)) for a in out))
        object.__setattr__(self, "_in", tuple(tuple(sorted(a)) for a in inn))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> "Graph":
        arcs = set()
        for u, v in edges:
            arcs.add((u, v))
            if not directed:
                arcs.add((v, u))
        return cls(n, directed, frozenset(arcs))

    @property
    def m(self) -> int:
        """Edge count: arcs for directed graphs, unordered edges otherwise."""
        return len(self.arcs) if self.directed else len(self.arcs) // 2

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def edges(self) -> list[tuple[int, int]]:
        """Arcs for directed graphs, ``u < v`` pairs for undirected ones."""
        if self.directed:
            return sorted(self.arcs)
        return sorted((u, v) for u, v in self.arcs if u < v)

    def to_text(self) -> str:
        kind = "directed" if self.directed else "undirected"
        es = self.edges()
        lines = [f"{self.n} {len(es)} {kind}"] + [f"{u} {v}" for u, v in es]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``n m directed|undirected`` edge-list format."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise GraphParseError(1, "missing header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[2] not in ("directed", "undirected"):
        raise GraphParseError(lineno, f"malformed header {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(lineno, f"malformed header {header!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError(lineno, "negative count in header")
    directed = parts[2] == "directed"
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno) + 1
        raise GraphParseError(where, f"expected {m} edge lines, found {len(body)}")

    arcs: set[tuple[int, int]] = set()
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, f"malformed edge {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(lineno, f"malformed edge {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"vertex index out of range in {ln!r}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        if (u, v) in arcs:
            raise GraphParseError(lineno, f"duplicate edge {u} {v}")
        arcs.add((u, v))
        if not directed:
            arcs.add((v, u))
    return Graph(n, directed, frozenset(arcs))


def neighbors_out(g: Graph, v: int) -> set[int]:
    return set(g.out_neighbors(v))


def induced_delete(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete ``removed`` and relabel the survivors densely.

    Returns the new graph and the old -> new vertex map.
    """
    gone = set(removed)
    keep = [v for v in range(g.n) if v not in gone]
    relabel = {old: new for new, old in enumerate(keep)}
    arcs = frozenset(
        (relabel[u], relabel[v]) for u, v in g.arcs if u in relabel and v in relabel
    )
    return Graph(len(keep), g.directed, arcs), relabel


def is_path_witness(g: Graph, path: Sequence[int], k: int | None = None) -> bool:
    if k is not None and len(path) != k:
        return False
    if len(set(path)) != len(path):
        return False
    if any(not (0 <= v < g.n) for v in path):
        return False
    return all(g.has_arc(a, b) for a, b in zip(path, path[1:]))


def enumerate_k_paths(g: Graph, k: int, cap: int | None = 1) -> tuple[int, list[PathWitness]]:
    """Count simple k-vertex paths by DFS and collect up to ``cap`` witnesses.

    Undirected paths are counted once per unordered path; directed paths once
    per vertex sequence. ``cap=None`` keeps every witness.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > g.n:
        return 0, []
    dedup = not g.directed and k > 1
    count = 0
    witnesses: list[PathWitness] = []
    stack: list[int] = []
    on_path = [False] * g.n

    def dfs(v: int) -> None:
        nonlocal count
        stack.append(v)
        on_path[v] = True
        if len(stack) == k:
            # each undirected path is seen twice; keep the orientation with smaller start
            if not dedup or stack[0] < stack[-1]:
                count += 1
                if cap is None or len(witnesses) < cap:
                    witnesses.append(tuple(stack))
        else:
            for w in g.out_neighbors(v):
                if not on_path[w]:
                    dfs(w)
        on_path[v] = False
        stack.pop()

    for v in range(g.n):
        dfs(v)
    return count, witnesses


def find_k_path(g: Graph, k: int) -> PathWitness | None:
    """First simple k-path found by DFS, or None; stops at the first hit."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > g.n:
        return None
    stack: list[int] = []
    on_path = [False] * g.n

    def dfs(v: int) -> bool:
        stack.append(v)
        on_path[v] = True
        if len(stack) == k:
            return True
        for w in g.out_neighbors(v):
            if not on_path[w] and dfs(w):
                return True
        on_path[v] = False
        stack.pop()
        return False

    for v in range(g.n):
        if dfs(v):
            return tuple(stack)
    return None
