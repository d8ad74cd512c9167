"""Degree, edge- and vertex-connectivity via unit-capacity max-flow.

Every undirected edge becomes a pair of opposite arcs of capacity one and
flow is kept antisymmetric, so after augmentation each edge carries flow in
at most one direction. Vertex connectivity goes through the usual split
network (v_in -> v_out of capacity one). Edge-disjoint paths are read off the flow by a
deterministic decomposition that cancels any circulations it walks into.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import DirectedPath, Graph, GraphError, reachable


class _Network:
    """Residual network over integer nodes with integer capacities.

    Neighbours are scanned in insertion order.
    """

    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [{} for _ in range(size)]
        self.flow: list[dict[int, int]] = [{} for _ in range(size)]

    def add_arc(self, u: int, v: int, c: int) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)
        self.flow[u].setdefault(v, 0)
        self.flow[v].setdefault(u, 0)

    def residual(self, u: int, v: int) -> int:
        return self.cap[u][v] - self.flow[u][v]

    def _augmenting_path(self, s: int, t: int) -> list[int] | None:
        parent = {s: s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            cap_u, flow_u = self.cap[u], self.flow[u]
            for v in cap_u:
                if v not in parent and cap_u[v] - flow_u[v] > 0:
                    parent[v] = u
                    if v == t:
                        path = [t]
                        while path[-1] != s:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    queue.append(v)
        return None

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        """Edmonds-Karp; stops early once ``limit`` units are routed."""
        value = 0
        while limit is None or value < limit:
            path = self._augmenting_path(s, t)
            if path is None:
                break
            push = min(self.residual(a, b) for a, b in zip(path, path[1:]))
            if limit is not None:
                push = min(push, limit - value)
            for a, b in zip(path, path[1:]):
                self.flow[a][b] += push
                self.flow[b][a] -= push
            value += push
        return value

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in self.cap[u]:
                if v not in seen and self.residual(u, v) > 0:
                    seen.add(v)
                    stack.append(v)
        return seen


def _unit_flow(graph: Graph, s: int, t: int, limit: int | None = None) -> tuple[int, set[tuple[int, int]]]:
    """Edmonds-Karp specialised to undirected unit capacities.

    ``arcs`` holds (u, v) when one unit flows u -> v; an arc has residual
    capacity exactly when it is not in ``arcs``.
    """
    adj = graph.adj
    arcs: set[tuple[int, int]] = set()
    value = 0
    while limit is None or value < limit:
        parent = {s: s}
        queue = deque([s])
        found = False
        while queue and not found:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and (u, v) not in arcs:
                    parent[v] = u
                    if v == t:
                        found = True
                        break
                    queue.append(v)
        if not found:
            break
        v = t
        while v != s:
            u = parent[v]
            if (v, u) in arcs:
                arcs.remove((v, u))
            else:
                arcs.add((u, v))
            v = u
        value += 1
    return value, arcs


def _flow_source_side(graph: Graph, s: int, arcs: set[tuple[int, int]]) -> set[int]:
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v in graph.adj[u]:
            if v not in seen and (u, v) not in arcs:
                seen.add(v)
                stack.append(v)
    return seen


def min_degree(graph: Graph) -> int:
    if graph.n < 1:
        raise GraphError("min_degree of the empty graph is undefined")
    return min(len(a) for a in graph.adj)


def local_edge_connectivity(graph: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of edge-disjoint s-t paths (capped at ``limit``)."""
    if s == t:
        raise GraphError("source and sink must differ")
    return _unit_flow(graph, s, t, limit)[0]


def _decompose(graph: Graph, arcs: set[tuple[int, int]], s: int, t: int, value: int) -> list[DirectedPath]:
    # Unit arcs carrying flow, consumed as paths are extracted.
    out: list[list[int]] = [[] for _ in range(graph.n)]
    for u, v in sorted(arcs):
        out[u].append(v)
    paths = []
    for _ in range(value):
        walk = [s]
        pos = {s: 0}
        while walk[-1] != t:
            u = walk[-1]
            v = out[u].pop(0)
            if v in pos:
                # circulation: drop it, its arcs are already consumed
                for w in walk[pos[v] + 1:]:
                    del pos[w]
                del walk[pos[v] + 1:]
            else:
                pos[v] = len(walk)
                walk.append(v)
        paths.append(DirectedPath.of(graph, walk))
    return paths


def max_flow_paths(graph: Graph, s: int, t: int) -> list[DirectedPath]:
    """A maximum family of pairwise edge-disjoint s-t paths.

    Augmentation and decomposition both scan neighbours in increasing order,
    so the output is deterministic.
    """
    if s == t:
        raise GraphError("source and sink must differ")
    value, arcs = _unit_flow(graph, s, t)
    return _decompose(graph, arcs, s, t, value)


def min_edge_cut_between(graph: Graph, s: int, t: int) -> list[tuple[int, int]]:
    _, arcs = _unit_flow(graph, s, t)
    side = _flow_source_side(graph, s, arcs)
    return sorted(e for e in graph.edges if (e[0] in side) != (e[1] in side))


def edge_connectivity(graph: Graph) -> int:
    """Global edge-connectivity: min over v of the 0-v max-flow.

    Every edge cut separates vertex 0 from some other vertex, so this family
    of flow calls suffices. Disconnected graphs give 0.
    """
    if graph.n < 2 or not graph.is_connected():
        return 0
    best = min_degree(graph)
    for v in range(1, graph.n):
        best = min(best, local_edge_connectivity(graph, 0, v, limit=best))
    return best


def edge_connectivity_adjacent(graph: Graph) -> int:
    """Edge-connectivity as the minimum over edges uv of the u-v max-flow."""
    if graph.n < 2 or not graph.is_connected():
        return 0
    best = min_degree(graph)
    for u, v in graph.sorted_edges():
        best = min(best, local_edge_connectivity(graph, u, v, limit=best))
    return best


def min_edge_cut(graph: Graph) -> list[tuple[int, int]]:
    """A minimum edge cut; empty for disconnected or trivial graphs."""
    if graph.n < 2 or not graph.is_connected():
        return []
    best_value, best_v = None, None
    for v in range(1, graph.n):
        value = local_edge_connectivity(graph, 0, v, limit=best_value)
        if best_value is None or value < best_value:
            best_value, best_v = value, v
    return min_edge_cut_between(graph, 0, best_v)


def _split_network(graph: Graph, s: int, t: int) -> _Network:
    # v_in = 2v, v_out = 2v + 1; s and t are not split-limited.
    big = graph.n + 1
    net = _Network(2 * graph.n)
    for v in range(graph.n):
        net.add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in graph.edges:
        net.add_arc(2 * u + 1, 2 * v, big)
        net.add_arc(2 * v + 1, 2 * u, big)
    return net


def local_vertex_connectivity(graph: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths, s and t non-adjacent."""
    if s == t or graph.has_edge(s, t):
        raise GraphError("local vertex connectivity needs distinct non-adjacent vertices")
    return _split_network(graph, s, t).max_flow(2 * s + 1, 2 * t, limit)


def _is_complete(graph: Graph) -> bool:
    return graph.m == graph.n * (graph.n - 1) // 2


def vertex_connectivity(graph: Graph) -> int:
    """Vertex-connectivity; K_n gives n-1 and disconnected graphs give 0."""
    if graph.n < 2 or not graph.is_connected():
        return 0
    if _is_complete(graph):
        return graph.n - 1
    best = min_degree(graph)
    for s, t in combinations(range(graph.n), 2):
        if not graph.has_edge(s, t):
            best = min(best, local_vertex_connectivity(graph, s, t, limit=best))
    return best


def min_vertex_cut(graph: Graph) -> list[int]:
    """A minimum vertex cut; for K_n, all vertices but one."""
    if graph.n < 2 or not graph.is_connected():
        return []
    if _is_complete(graph):
        return list(range(graph.n - 1))
    best_value, best_pair = None, None
    for s, t in combinations(range(graph.n), 2):
        if graph.has_edge(s, t):
            continue
        value = local_vertex_connectivity(graph, s, t, limit=best_value)
        if best_value is None or value < best_value:
            best_value, best_pair = value, (s, t)
    s, t = best_pair
    net = _split_network(graph, s, t)
    net.max_flow(2 * s + 1, 2 * t)
    side = net.source_side(2 * s + 1)
    return sorted(v for v in range(graph.n) if 2 * v in side and 2 * v + 1 not in side)


@dataclass(frozen=True)
class ConnectivityReport:
    delta: int
    lam: int
    kappa: int
    edge_cut: tuple[tuple[int, int], ...]
    vertex_cut: tuple[int, ...]


def connectivity_report(graph: Graph) -> ConnectivityReport:
    return ConnectivityReport(
        delta=min_degree(graph),
        lam=edge_connectivity(graph),
        kappa=vertex_connectivity(graph),
        edge_cut=tuple(min_edge_cut(graph)),
        vertex_cut=tuple(min_vertex_cut(graph)),
    )


def brute_force_edge_connectivity(graph: Graph) -> int:
    """Smallest edge set whose removal disconnects the graph, by enumeration.

    Subsets are tried in order of size up to the minimum degree, which is
    always achievable by isolating a vertex. Exponential; small inputs only.
    """
    if graph.n < 2 or not graph.is_connected():
        return 0
    edges = graph.sorted_edges()
    delta = min_degree(graph)
    for size in range(1, delta):
        for removed in combinations(edges, size):
            if len(reachable(graph, 0, set(removed))) < graph.n:
                return size
    return delta
