"""Graph specs (``family:params``) and seeded random corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .graph import (
    Graph,
    GraphError,
    bridged_cliques,
    complete_graph,
    cycle_graph,
    matched_cliques,
    parse_edge_list,
    path_graph,
)

FAMILIES = ("cycle", "complete", "path", "matched", "bridged", "random", "file")


def random_connected_graph(n: int, p: float, seed: int, max_tries: int = 10_000) -> Graph:
    """G(n, p) redrawn from one seeded stream until it is connected."""
    if n < 2:
        raise GraphError("random graphs need n >= 2")
    if not 0.0 < p <= 1.0:
        raise GraphError(f"edge probability must lie in (0, 1], got {p}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        g = Graph(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            return g
    raise GraphError(f"no connected G({n}, {p}) after {max_tries} draws")


def _ints(params: str, count: int, family: str) -> list[int]:
    parts = params.split(",") if params else []
    if len(parts) != count:
        raise GraphError(f"{family} expects {count} integer parameter(s), got {params!r}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GraphError(f"{family}: bad integer in {params!r}") from None


def parse_graph_spec(spec: str) -> Graph:
    """Build a graph from ``cycle:5``, ``complete:4``, ``random:8,0.5,7``, ``file:g.txt`` etc."""
    family, _, params = spec.partition(":")
    family = family.strip().lower()
    if family == "cycle":
        return cycle_graph(*_ints(params, 1, family))
    if family == "complete":
        return complete_graph(*_ints(params, 1, family))
    if family == "path":
        return path_graph(*_ints(params, 1, family))
    if family == "matched":
        return matched_cliques(*_ints(params, 1, family))
    if family == "bridged":
        return bridged_cliques(*_ints(params, 1, family))
    if family == "random":
        parts = params.split(",")
        if len(parts) != 3:
            raise GraphError("random expects n,p,seed")
        try:
            return random_connected_graph(int(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError:
            raise GraphError(f"random: bad parameters {params!r}") from None
    if family == "file":
        try:
            return parse_edge_list(Path(params).read_text())
        except OSError as exc:
            raise GraphError(f"cannot read {params}: {exc}") from None
    raise GraphError(f"unknown graph family {family!r}; expected one of {', '.join(FAMILIES)}")


@dataclass(frozen=True)
class CorpusEntry:
    spec: str
    graph: Graph


def random_corpus(count: int = 200, seed: int = 0, n_min: int = 3, n_max: int = 9,
                  probabilities: tuple[float, ...] = (0.3, 0.5, 0.8)) -> list[CorpusEntry]:
    """Connected random graphs cycling through orders and edge densities.

    Entry ``i`` has order ``n_min + i % span``, density
    ``probabilities[(i // span) % len(probabilities)]`` and seed ``seed + i``.
    """
    span = n_max - n_min + 1
    out = []
    for i in range(count):
        n = n_min + i % span
        p = probabilities[(i // span) % len(probabilities)]
        spec = f"random:{n},{p},{seed + i}"
        out.append(CorpusEntry(spec, random_connected_graph(n, p, seed + i)))
    return out
