"""k-token graphs F_k(G) with a colexicographic ranking of k-subsets."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .graph import Graph, GraphError

TokenConfig = tuple[int, ...]


def config(members: Iterable[int]) -> TokenConfig:
    """Canonical sorted form of a token placement."""
    c = tuple(sorted(int(v) for v in members))
    if len(set(c)) != len(c):
        raise GraphError(f"token configuration {c} repeats a vertex")
    return c


def rank(members: Sequence[int]) -> int:
    """Colex rank of a k-subset: sum of C(c_i, i+1) over sorted members."""
    c = config(members)
    if c and c[0] < 0:
        raise GraphError(f"negative vertex in {c}")
    return sum(comb(v, i + 1) for i, v in enumerate(c))


def unrank(r: int, n: int, k: int) -> TokenConfig:
    if not 0 <= k <= n:
        raise GraphError(f"k={k} out of range for n={n}")
    if not 0 <= r < comb(n, k):
        raise GraphError(f"rank {r} out of range [0, C({n},{k}))")
    out = []
    v = n - 1
    for i in range(k, 0, -1):
        while comb(v, i) > r:
            v -= 1
        out.append(v)
        r -= comb(v, i)
        v -= 1
    return tuple(reversed(out))


def format_config(c: Sequence[int]) -> str:
    return "{" + ",".join(str(v) for v in c) + "}"


class TokenGraph:
    """F_k(G) materialised as a :class:`Graph` whose vertex ids are colex ranks."""

    def __init__(self, base: Graph, k: int):
        n = base.n
        if not 1 <= k <= n - 1:
            raise GraphError(f"k must lie in [1, {n - 1}], got {k}")
        self.base = base
        self.k = k
        self.configs: list[TokenConfig] = [unrank(r, n, k) for r in range(comb(n, k))]
        self._index = {c: r for r, c in enumerate(self.configs)}
        edges = []
        # Each edge uv of G pairs S+u with S+v for every (k-1)-subset S avoiding u, v.
        for u, v in base.sorted_edges():
            rest = [w for w in range(n) if w != u and w != v]
            for s in combinations(rest, k - 1):
                edges.append((rank(s + (u,)), rank(s + (v,))))
        labels = [format_config(c) for c in self.configs]
        self.graph = Graph(len(self.configs), edges, labels=labels)

    def __repr__(self) -> str:
        return f"TokenGraph(n={self.base.n}, k={self.k}, order={self.graph.n}, size={self.graph.m})"

    def rank(self, c: Sequence[int]) -> int:
        hit = self._index.get(c) if isinstance(c, tuple) else None
        if hit is not None:
            return hit
        c = config(c)
        if len(c) != self.k or (c and c[-1] >= self.base.n):
            raise GraphError(f"{c} is not a {self.k}-subset of [0, {self.base.n})")
        return rank(c)

    def unrank(self, r: int) -> TokenConfig:
        return self.configs[r]

    def adjacent(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.graph.has_edge(self.rank(a), self.rank(b))


def build_token_graph(base: Graph, k: int) -> TokenGraph:
    return TokenGraph(base, k)


def config_degree(tg: TokenGraph, c: Sequence[int]) -> int:
    """Number of single-token moves available from ``c``.

    Counts pairs (occupied a, unoccupied neighbour b) in the base graph,
    without looking at the materialised token graph.
    """
    occupied = set(tg.unrank(tg.rank(c)))
    return sum(1 for a in occupied for b in tg.base.adj[a] if b not in occupied)


def complement_map(tg: TokenGraph) -> list[int]:
    """Vertex map F_k(G) -> F_{n-k}(G) sending A to V minus A, as ranks."""
    everything = set(range(tg.base.n))
    return [rank(sorted(everything.difference(c))) for c in tg.configs]


def symmetric_difference_pair(a: Sequence[int], b: Sequence[int]) -> tuple[int, int] | None:
    """For configs differing by one token, return (left of a, entered in b)."""
    only_a = set(a).difference(b)
    only_b = set(b).difference(a)
    if len(only_a) != 1 or len(only_b) != 1:
        return None
    return only_a.pop(), only_b.pop()
