"""Bound checks on measured token-graph connectivity."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .connectivity import edge_connectivity, min_degree, vertex_connectivity
from .graph import Graph
from .tokens import TokenGraph

HOLDS, TIGHT, VIOLATED, HYPOTHESIS = "holds", "tight", "VIOLATED", "hypothesis-violated"


def token_bound(k: int, lam: int) -> int:
    """k(lambda - k + 1), the guaranteed edge-connectivity of F_k(G)."""
    return k * (lam - k + 1)


@dataclass
class VerificationRecord:
    graph: str
    n: int
    k: int
    lambda_G: int
    delta_G: int
    kappa_G: int
    lambda_Fk: int
    delta_Fk: int
    bound: int
    status: str

    def as_dict(self) -> dict:
        return asdict(self)


def verify_cell(name: str, graph: Graph, k: int, *, lam: int | None = None,
                kappa: int | None = None) -> VerificationRecord:
    """Measure F_k(G) and classify it against the bound.

    With k <= lambda(G) both the edge-connectivity and the minimum degree of
    F_k(G) must reach the bound; equality of the former is reported as
    ``tight``. Larger k is measured but flagged ``hypothesis-violated``.
    """
    lam = edge_connectivity(graph) if lam is None else lam
    kappa = vertex_connectivity(graph) if kappa is None else kappa
    tg = TokenGraph(graph, k)
    lam_f = edge_connectivity(tg.graph)
    delta_f = min_degree(tg.graph)
    bound = token_bound(k, lam)
    if k > lam:
        status = HYPOTHESIS
    elif lam_f < bound or delta_f < bound:
        status = VIOLATED
    elif lam_f == bound:
        status = TIGHT
    else:
        status = HOLDS
    return VerificationRecord(name, graph.n, k, lam, min_degree(graph), kappa, lam_f, delta_f, bound, status)
