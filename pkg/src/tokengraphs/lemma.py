"""Explicit edge-disjoint path families between adjacent token configurations.

Given adjacent configurations X = Z + {x} and Y = Z + {y} of F_k(G) with
k <= lambda(G), :func:`construct_family` builds at least k(lambda(G)-k+1)
pairwise edge-disjoint X-Y paths of F_k(G) out of three pieces:

* ``C1``: for each stationary token z and each neighbour u of z outside
  X and Y, park z on u, swap x for y, bring the token back.
* ``C2``: direct lifts of the Menger paths of G that avoid Z, and of the
  two-step detours x, z, y through tokens adjacent to both x and y.
* ``Cg``: the remaining "good" Menger paths, lifted with their first and
  last edge handled as separate single moves.

The result is returned as a :class:`DisjointFamilyCertificate` that has
been checked against the materialised token graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .connectivity import edge_connectivity, max_flow_paths
from .graph import DirectedPath, Graph, GraphError
from .tokens import TokenConfig, TokenGraph, config, format_config, symmetric_difference_pair

SCHEMA_VERSION = 1


class LemmaError(ValueError):
    pass


class InadmissiblePathError(LemmaError):
    pass


class NotAdjacentError(LemmaError):
    pass


class HypothesisViolation(LemmaError):
    """k exceeds the edge-connectivity of the base graph."""


class PartitionError(LemmaError):
    pass


class CertificateError(LemmaError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


# -- lifting --------------------------------------------------------------


@dataclass(frozen=True)
class LiftedPath:
    """A walk in F_k(G) recorded as configurations plus the token moves between them."""

    configs: tuple[TokenConfig, ...]
    moves: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def start(self) -> TokenConfig:
        return self.configs[0]

    @property
    def end(self) -> TokenConfig:
        return self.configs[-1]

    @property
    def internal(self) -> tuple[TokenConfig, ...]:
        return self.configs[1:-1]

    def __add__(self, other: LiftedPath) -> LiftedPath:
        if self.end != other.start:
            raise LemmaError(f"cannot concatenate: {self.end} != {other.start}")
        return LiftedPath(self.configs + other.configs[1:], self.moves + other.moves)

    def edge_keys(self) -> list[tuple[TokenConfig, TokenConfig]]:
        return [(a, b) if a < b else (b, a) for a, b in zip(self.configs, self.configs[1:])]


def is_admissible(path: DirectedPath, X: Iterable[int]) -> bool:
    occupied = set(X)
    return path.start in occupied and path.end not in occupied


def lift_path(X: Iterable[int], path: DirectedPath) -> LiftedPath:
    """Turn an admissible path of G into a path of F_k(G) of the same length.

    Tokens sitting on the path are advanced last-first: the one nearest the
    end goes to the end vertex, then each earlier one slides up to where the
    next one started. Occupancy is simulated move by move and any blocked
    move raises.
    """
    X = config(X)
    if not is_admissible(path, X):
        raise InadmissiblePathError(f"path {path.vertices} is not admissible for {format_config(X)}")
    occupied = set(X)
    verts = path.vertices
    stops = [i for i, v in enumerate(verts) if v in occupied]
    targets = stops[1:] + [len(verts) - 1]
    configs = [X]
    moves = []
    for src, dst in reversed(list(zip(stops, targets))):
        for a in range(src, dst):
            frm, to = verts[a], verts[a + 1]
            if to in occupied:
                raise LemmaError(f"token move {frm}->{to} blocked while lifting {verts}")
            occupied.remove(frm)
            occupied.add(to)
            moves.append((frm, to))
            configs.append(tuple(sorted(occupied)))
    return LiftedPath(tuple(configs), tuple(moves))


def _step(graph: Graph, X: TokenConfig, a: int, b: int) -> LiftedPath:
    return lift_path(X, DirectedPath.of(graph, (a, b)))


def _swapped_pair(graph: Graph, X: TokenConfig, Y: TokenConfig) -> tuple[int, int]:
    pair = symmetric_difference_pair(X, Y)
    if pair is None or not graph.has_edge(*pair):
        raise NotAdjacentError(f"{format_config(X)} and {format_config(Y)} are not adjacent in F_k(G)")
    return pair


# -- C1 -------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    """One path of the family with the data it was built from.

    For ``C1`` members ``via`` is ``(z, u)``; for ``C2``/``Cg`` it is the
    index of the underlying Menger path.
    """

    tag: str
    path: LiftedPath
    via: tuple[int, ...]


def build_c1(graph: Graph, X: Sequence[int], Y: Sequence[int]) -> tuple[list[FamilyMember], list[int]]:
    """Length-3 detours parking each stationary token on an outside neighbour.

    Returns the members and the per-token counts m_i (stationary tokens in
    increasing order).
    """
    X, Y = config(X), config(Y)
    x, y = _swapped_pair(graph, X, Y)
    busy = set(X) | set(Y)
    members = []
    counts = []
    for z in X:
        if z == x:
            continue
        outside = [u for u in graph.adj[z] if u not in busy]
        counts.append(len(outside))
        for u in outside:
            path = _step(graph, X, z, u)
            path = path + _step(graph, path.end, x, y)
            path = path + _step(graph, path.end, u, z)
            members.append(FamilyMember("C1", path, (z, u)))
    return members, counts


# -- Menger system --------------------------------------------------------

N_XZY, N_0, N_BAD, N_GOOD = "Nxzy", "N0", "Nb", "Ng"


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _shortcut(walk: Sequence[int]) -> tuple[int, ...]:
    """Drop closed sub-walks so every vertex appears once; uses a subset of the edges."""
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            for w in out[pos[v] + 1:]:
                del pos[w]
            del out[pos[v] + 1:]
        else:
            pos[v] = len(out)
            out.append(v)
    return tuple(out)


@dataclass
class MengerSystem:
    """A repaired family of edge-disjoint x-y paths of G and its partition."""

    x: int
    y: int
    Z: tuple[int, ...]
    Z_xy: tuple[int, ...]
    paths: list[DirectedPath]
    tags: list[str] = field(default_factory=list)
    repairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.paths)

    @property
    def k(self) -> int:
        return len(self.Z) + 1

    @property
    def ell(self) -> int:
        return len(self.Z_xy)

    def count(self, tag: str) -> int:
        return self.tags.count(tag)

    @property
    def n0(self) -> int:
        return self.count(N_0)

    @property
    def nb(self) -> int:
        return self.count(N_BAD)

    @property
    def ng(self) -> int:
        return self.count(N_GOOD)

    def ends(self, r: int) -> tuple[int, int]:
        """First and last internal vertex (x_r, y_r) of path r."""
        v = self.paths[r].vertices
        return v[1], v[-2]

    def check_paths(self) -> list[str]:
        """Endpoint and pairwise edge-disjointness checks on the path family alone."""
        problems = []
        seen: dict[tuple[int, int], int] = {}
        for r, p in enumerate(self.paths):
            if p.start != self.x or p.end != self.y:
                problems.append(f"N[{r}] is not an x-y path")
            for e in p.edge_set():
                if e in seen:
                    problems.append(f"N[{seen[e]}] and N[{r}] share edge {e}")
                seen[e] = r
        return problems

    def check(self) -> list[str]:
        problems = self.check_paths()
        present = {p.vertices for p in self.paths}
        for z in self.Z_xy:
            if (self.x, z, self.y) not in present:
                problems.append(f"detour {self.x},{z},{self.y} missing after repair")
        if len(self.tags) != self.t:
            problems.append("partition does not cover N")
        if self.t != self.ell + self.n0 + self.nb + self.ng or self.count(N_XZY) != self.ell:
            problems.append(f"t={self.t} != l+n0+nb+ng={self.ell}+{self.n0}+{self.nb}+{self.ng}")
        if self.nb > self.k - 1 - self.ell:
            problems.append(f"nb={self.nb} exceeds k-1-l={self.k - 1 - self.ell}")
        zset = set(self.Z)
        lone = zset.difference(self.Z_xy)
        for r, tag in enumerate(self.tags):
            verts = self.paths[r].vertices
            if tag == N_0 and zset.intersection(verts):
                problems.append(f"N0 path {r} meets Z")
            if tag in (N_BAD, N_GOOD):
                xr, yr = self.ends(r)
                hit = xr in lone or yr in lone
                if hit != (tag == N_BAD):
                    problems.append(f"path {r} misclassified as {tag}")
        return problems


def repair_menger_system(
    graph: Graph, paths: Sequence[DirectedPath], x: int, y: int, Z: Iterable[int]
) -> MengerSystem:
    """Make every detour x, z, y (z a token adjacent to both x and y) a member, then partition.

    The detours are processed in increasing order of z, each against the
    current family:

    1. neither xz nor zy is used: the detour replaces the lowest-index path
       that is not itself a detour;
    2. exactly one is used: the detour replaces the path using it;
    3. xz lies on P_i and zy on P_j, i != j: P_i becomes the detour and P_j
       becomes the x-y path formed by the remaining edges of both.
    """
    Z = tuple(sorted(Z))
    k = len(Z) + 1
    N = list(paths)
    if len(N) < k:
        raise LemmaError(f"need at least k={k} paths, got {len(N)}")
    Z_xy = tuple(z for z in Z if graph.has_edge(x, z) and graph.has_edge(z, y))
    system = MengerSystem(x, y, Z, Z_xy, N)
    initial = system.check_paths()
    if initial:
        raise LemmaError("input is not an edge-disjoint x-y family: " + "; ".join(initial))

    detour_mids = set(Z_xy)

    def is_detour(p: DirectedPath) -> bool:
        return len(p) == 2 and p.vertices[1] in detour_mids

    for z in Z_xy:
        detour = DirectedPath.of(graph, (x, z, y))
        xz, zy = _edge(x, z), _edge(z, y)
        i = next((r for r, p in enumerate(N) if xz in p.edge_set()), None)
        j = next((r for r, p in enumerate(N) if zy in p.edge_set()), None)
        if i is None and j is None:
            r = next(r for r, p in enumerate(N) if not is_detour(p))
            N[r] = detour
            system.repairs.append((z, 1))
        elif i is None or j is None:
            N[i if j is None else j] = detour
            system.repairs.append((z, 2))
        elif i != j:
            # N[j] ends ..., z, y and N[i] starts x, z, ...
            walk = N[j].vertices[:-1] + N[i].vertices[2:]
            N[i] = detour
            N[j] = DirectedPath.of(graph, _shortcut(walk))
            system.repairs.append((z, 3))
        else:
            system.repairs.append((z, 0))

    zset = set(Z)
    lone = zset.difference(Z_xy)
    for r, p in enumerate(N):
        if is_detour(p):
            system.tags.append(N_XZY)
        elif not zset.intersection(p.vertices):
            system.tags.append(N_0)
        else:
            xr, yr = system.ends(r)
            system.tags.append(N_BAD if xr in lone or yr in lone else N_GOOD)
    return system


# -- C2 and Cg ------------------------------------------------------------


def build_c2_cg(
    graph: Graph, system: MengerSystem, X: Sequence[int], Y: Sequence[int]
) -> tuple[list[FamilyMember], list[FamilyMember]]:
    """Lift the Menger paths: whole for N0 and detours, trimmed for good paths; bad ones are skipped."""
    X, Y = config(X), config(Y)
    busy = set(X) | set(Y)
    c2: list[FamilyMember] = []
    cg: list[FamilyMember] = []
    for r, (p, tag) in enumerate(zip(system.paths, system.tags)):
        if tag in (N_0, N_XZY):
            c2.append(FamilyMember("C2", lift_path(X, p), (r,)))
        elif tag == N_GOOD:
            xr, yr = system.ends(r)
            if xr in busy or yr in busy:
                raise PartitionError(f"good path {r} has an occupied end ({xr}, {yr})")
            path = _step(graph, X, system.x, xr)
            path = path + lift_path(path.end, DirectedPath(p.vertices[1:-1]))
            path = path + _step(graph, path.end, yr, system.y)
            cg.append(FamilyMember("Cg", path, (r,)))
    return c2, cg


# -- certificate ----------------------------------------------------------


def verify_edge_disjoint(
    family: Sequence[LiftedPath], tg: TokenGraph | None = None
) -> tuple[bool, tuple[tuple[TokenConfig, TokenConfig], int, int] | None]:
    """Check no F_k(G) edge is used by two members (or twice by one).

    Returns ``(True, None)`` or ``(False, (edge, i, j))`` for the first
    clash found, ``i <= j`` being the member indices.
    """
    owner: dict[tuple, int] = {}
    for j, path in enumerate(family):
        for e in path.edge_keys():
            key = e if tg is None else tuple(sorted((tg.rank(e[0]), tg.rank(e[1]))))
            if key in owner:
                return False, (e, owner[key], j)
            owner[key] = j
    return True, None


@dataclass
class DisjointFamilyCertificate:
    X: TokenConfig
    Y: TokenConfig
    k: int
    t: int
    system: MengerSystem
    members: list[FamilyMember]
    m: list[int]

    @property
    def bound(self) -> int:
        return self.k * (self.t - self.k + 1)

    @property
    def achieved(self) -> int:
        return len(self.members)

    def family(self, tag: str | None = None) -> list[LiftedPath]:
        return [mb.path for mb in self.members if tag is None or mb.tag == tag]

    def verify(self, tg: TokenGraph) -> list[str]:
        """Re-check every claim against the materialised token graph; returns the failures."""
        problems = list(self.system.check())
        x, y = self.system.x, self.system.y
        for idx, mb in enumerate(self.members):
            p = mb.path
            if p.start != self.X or p.end != self.Y:
                problems.append(f"member {idx} does not run from X to Y")
            if len(set(p.configs)) != len(p.configs):
                problems.append(f"member {idx} repeats a configuration")
            for (a, b), move in zip(zip(p.configs, p.configs[1:]), p.moves):
                if not tg.adjacent(a, b):
                    problems.append(f"member {idx}: {format_config(a)} -- {format_config(b)} is not an edge")
                elif symmetric_difference_pair(a, b) != move:
                    problems.append(f"member {idx}: move {move} does not match configurations")
            inner = p.internal
            if mb.tag == "C1":
                z, u = mb.via
                if len(p) != 3 or any(z in c or u not in c or ((x in c) == (y in c)) for c in inner):
                    problems.append(f"C1 member {idx} breaks the detour signature")
            else:
                tag = self.system.tags[mb.via[0]]
                both = tag == N_XZY
                for c in inner:
                    if both and not (x in c and y in c):
                        problems.append(f"member {idx} from a detour misses x or y internally")
                    if not both and (x in c or y in c):
                        problems.append(f"member {idx} holds x or y internally")
            if mb.tag == "C2" and len(p) != len(self.system.paths[mb.via[0]]):
                problems.append(f"member {idx} changed length when lifted")
        ok, clash = verify_edge_disjoint(self.family(), tg)
        if not ok:
            e, i, j = clash
            problems.append(f"members {i} and {j} share edge {format_config(e[0])} -- {format_config(e[1])}")
        s = self.system
        if len(self.m) != self.k - 1 or sum(self.m) != len(self.family("C1")):
            problems.append("C1 size does not match the neighbour counts")
        if sum(self.m) < (self.k - 1) * (self.t - self.k + 1) - s.ell:
            problems.append(f"sum m={sum(self.m)} below (k-1)(t-k+1)-l")
        if self.achieved != sum(self.m) + s.ell + s.n0 + s.ng:
            problems.append("family size differs from sum m + l + n0 + ng")
        if self.achieved < self.bound:
            problems.append(f"achieved {self.achieved} < bound {self.bound}")
        return problems

    def to_dict(self) -> dict:
        s = self.system

        def dump(tag: str) -> list[dict]:
            return [
                {"via": list(mb.via), "configs": [list(c) for c in mb.path.configs],
                 "moves": [list(mv) for mv in mb.path.moves]}
                for mb in self.members if mb.tag == tag
            ]

        return {
            "schema": SCHEMA_VERSION,
            "X": list(self.X),
            "Y": list(self.Y),
            "k": self.k,
            "lambda_G": self.t,
            "bound": self.bound,
            "achieved": self.achieved,
            "x": s.x,
            "y": s.y,
            "Z": list(s.Z),
            "Z_xy": list(s.Z_xy),
            "m": list(self.m),
            "ell": s.ell,
            "n0": s.n0,
            "nb": s.nb,
            "ng": s.ng,
            "menger": [{"tag": tag, "path": list(p.vertices)} for p, tag in zip(s.paths, s.tags)],
            "families": {"C1": dump("C1"), "C2": dump("C2"), "Cg": dump("Cg")},
        }


def construct_family(
    graph: Graph,
    k: int,
    X: Sequence[int],
    Y: Sequence[int],
    *,
    token_graph: TokenGraph | None = None,
    lam: int | None = None,
) -> DisjointFamilyCertificate:
    """Build and verify k(lambda(G)-k+1) edge-disjoint X-Y paths in F_k(G).

    ``token_graph`` and ``lam`` may be passed in to reuse work across many
    pairs of the same graph. Raises :class:`HypothesisViolation` when
    k > lambda(G) and :class:`CertificateError` if any check fails.
    """
    X, Y = config(X), config(Y)
    if len(X) != k or len(Y) != k:
        raise LemmaError(f"configurations must have {k} tokens")
    if any(not 0 <= v < graph.n for v in X + Y):
        raise GraphError("configuration vertex out of range")
    x, y = _swapped_pair(graph, X, Y)
    if lam is None:
        lam = edge_connectivity(graph)
    if k > lam:
        raise HypothesisViolation(f"k={k} exceeds lambda(G)={lam}")
    if token_graph is None:
        token_graph = TokenGraph(graph, k)
    elif token_graph.k != k or token_graph.base != graph:
        raise LemmaError("token graph does not match (G, k)")

    Z = tuple(v for v in X if v != x)
    menger = max_flow_paths(graph, x, y)[:lam]
    system = repair_menger_system(graph, menger, x, y, Z)
    c1, m = build_c1(graph, X, Y)
    c2, cg = build_c2_cg(graph, system, X, Y)
    cert = DisjointFamilyCertificate(X, Y, k, lam, system, c1 + c2 + cg, m)
    problems = cert.verify(token_graph)
    if problems:
        raise CertificateError(problems)
    return cert


def adjacent_pairs(tg: TokenGraph) -> Iterable[tuple[TokenConfig, TokenConfig]]:
    """Every ordered pair of adjacent configurations."""
    for a, b in tg.graph.sorted_edges():
        A, B = tg.configs[a], tg.configs[b]
        yield A, B
        yield B, A


__all__ = [
    "CertificateError",
    "DisjointFamilyCertificate",
    "FamilyMember",
    "HypothesisViolation",
    "InadmissiblePathError",
    "LemmaError",
    "LiftedPath",
    "MengerSystem",
    "NotAdjacentError",
    "PartitionError",
    "adjacent_pairs",
    "build_c1",
    "build_c2_cg",
    "construct_family",
    "is_admissible",
    "lift_path",
    "repair_menger_system",
    "verify_edge_disjoint",
]
