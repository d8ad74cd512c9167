"""Simple undirected graphs on dense integer vertices.

A :class:`Graph` is immutable once built. Vertices are ``0..n-1``; an
optional label table maps them to display strings (token graphs label
their vertices with the subsets they stand for).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``; each vertex
    also gets a sorted neighbour tuple. Both views are built once and never
    mutated.
    """

    __slots__ = ("n", "edges", "adj", "labels", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            nbrs[u].append(v)
            nbrs[v].append(u)
        if labels is not None and len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(pairs)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self.labels: tuple[str, ...] | None = tuple(labels) if labels is not None else None
        self._nbr_sets = tuple(frozenset(a) for a in nbrs)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(reachable(self, 0)) == self.n

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        drop = {(u, v) if u < v else (v, u) for u, v in removed}
        return Graph(self.n, (e for e in self.edges if e not in drop))

    def without_vertices(self, removed: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on the remaining vertices, relabelled densely.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), edges), keep


def reachable(graph: Graph, source: int, banned_edges: set[tuple[int, int]] | None = None) -> set[int]:
    """Vertices reachable from ``source``, optionally ignoring some edges."""
    seen = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        for w in graph.adj[u]:
            if w in seen:
                continue
            if banned_edges and ((u, w) if u < w else (w, u)) in banned_edges:
                continue
            seen.add(w)
            stack.append(w)
    return seen


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate and reversed pairs collapse to one edge."""
    return Graph(n, edge_list)


@dataclass(frozen=True)
class DirectedPath:
    """A path ``v0 -> v1 -> ... -> vm`` (m >= 1) with distinct vertices."""

    vertices: tuple[int, ...]

    @classmethod
    def of(cls, graph: Graph, vertices: Iterable[int]) -> DirectedPath:
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 2:
            raise GraphError("a path needs at least one edge")
        if len(set(vs)) != len(vs):
            raise GraphError(f"repeated vertex in path {vs}")
        for a, b in zip(vs, vs[1:]):
            if not (0 <= a < graph.n and 0 <= b < graph.n) or not graph.has_edge(a, b):
                raise GraphError(f"{a} and {b} are not adjacent")
        return cls(vs)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices) - 1

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) if a < b else (b, a) for a, b in zip(self.vertices, self.vertices[1:]))

    def __iter__(self):
        return iter(self.vertices)


# -- families -------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle_graph needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path_graph needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def matched_cliques(t: int) -> Graph:
    """Two copies of K_t joined by the perfect matching ``i -- t+i``."""
    if t < 2:
        raise GraphError("matched_cliques needs t >= 2")
    edges = list(combinations(range(t), 2))
    edges += [(t + u, t + v) for u, v in combinations(range(t), 2)]
    edges += [(i, t + i) for i in range(t)]
    return Graph(2 * t, edges)


def bridged_cliques(r: int) -> Graph:
    """Two copies of K_r joined by the single edge ``(r-1, r)``."""
    if r < 2:
        raise GraphError("bridged_cliques needs r >= 2")
    edges = list(combinations(range(r), 2))
    edges += [(r + u, r + v) for u, v in combinations(range(r), 2)]
    edges.append((r - 1, r))
    return Graph(2 * r, edges)


# -- text formats ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by ``u v`` pairs.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty edge list: missing vertex count")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit():
        raise GraphError(f"line {lineno}: expected a vertex count, got {' '.join(head)!r}")
    n = int(head[0])
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {' '.join(parts)!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: endpoint out of range for n={n}")
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(graph: Graph) -> str:
    lines = [str(graph.n)]
    lines += [f"{u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def emit_dot(graph: Graph, name: str = "G") -> str:
    """Undirected DOT text, one statement per vertex and per edge."""
    out = [f"graph {name} {{"]
    for v in range(graph.n):
        out.append(f'  {v} [label="{graph.label(v)}"];')
    for u, v in graph.sorted_edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
