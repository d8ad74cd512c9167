import json

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs
from tokengraphs.connectivity import edge_connectivity, local_edge_connectivity
from tokengraphs.graph import DirectedPath, Graph, build_graph, complete_graph, cycle_graph, matched_cliques
from tokengraphs.lemma import (
    N_0,
    N_BAD,
    N_GOOD,
    N_XZY,
    CertificateError,
    HypothesisViolation,
    InadmissiblePathError,
    LemmaError,
    LiftedPath,
    NotAdjacentError,
    adjacent_pairs,
    build_c1,
    build_c2_cg,
    construct_family,
    is_admissible,
    lift_path,
    repair_menger_system,
    verify_edge_disjoint,
)
from tokengraphs.tokens import TokenGraph


@pytest.fixture
def c5_paper():
    """C5 on the labels 1..5 (vertex 0 unused)."""
    return build_graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


def test_admissible(c5_paper):
    q = DirectedPath.of(c5_paper, [2, 1, 5, 4, 3])
    assert is_admissible(q, {2, 4})
    assert not is_admissible(q, {2, 3})
    assert not is_admissible(q, {1, 4})


def test_lift_worked_example(c5_paper):
    q = DirectedPath.of(c5_paper, [2, 1, 5, 4, 3])
    lifted = lift_path((2, 4), q)
    assert [set(c) for c in lifted.configs] == [{2, 4}, {2, 3}, {1, 3}, {5, 3}, {4, 3}]
    assert lifted.moves == ((4, 3), (2, 1), (1, 5), (5, 4))
    assert len(lifted) == len(q)


def test_lift_single_token():
    g = build_graph(2, [(0, 1)])
    assert lift_path((0,), DirectedPath.of(g, [0, 1])).configs == ((0,), (1,))


def test_lift_lone_token_follows_path():
    g = cycle_graph(7)
    p = DirectedPath.of(g, [0, 1, 2, 3])
    lifted = lift_path((0, 5), p)
    assert lifted.moves == ((0, 1), (1, 2), (2, 3))


def test_lift_rejects_inadmissible(c5_paper):
    with pytest.raises(InadmissiblePathError):
        lift_path((3, 4), DirectedPath.of(c5_paper, [2, 1, 5, 4, 3]))


@st.composite
def admissible_instances(draw):
    g = draw(graphs(min_n=3, max_n=9, connected=True))
    walk = [draw(st.integers(0, g.n - 1))]
    for _ in range(draw(st.integers(1, g.n - 1))):
        nxt = [w for w in g.adj[walk[-1]] if w not in walk]
        if not nxt:
            break
        walk.append(draw(st.sampled_from(nxt)))
    assume(len(walk) >= 2)
    others = [v for v in range(g.n) if v not in (walk[0], walk[-1])]
    extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others))) if others else []
    return g, DirectedPath.of(g, walk), tuple(sorted({walk[0], *extra}))


@settings(max_examples=150, deadline=None)
@given(admissible_instances())
def test_lift_preserves_length_and_is_a_path(inst):
    g, p, X = inst
    lifted = lift_path(X, p)
    assert len(lifted) == len(p)
    assert set(lifted.end) == (set(X) - {p.start}) | {p.end}
    assert len(set(lifted.configs)) == len(lifted.configs)
    tg = TokenGraph(g, len(X)) if len(X) < g.n else None
    for a, b in zip(lifted.configs, lifted.configs[1:]):
        (moved_from,), (moved_to,) = set(a) - set(b), set(b) - set(a)
        assert g.has_edge(moved_from, moved_to)
        if tg is not None:
            assert tg.adjacent(a, b)


def test_c1_k4():
    members, m = build_c1(complete_graph(4), (0, 1), (0, 2))
    assert m == [1]
    assert [set(c) for c in members[0].path.configs] == [{0, 1}, {3, 1}, {3, 2}, {0, 2}]


def test_c1_single_token_is_empty():
    members, m = build_c1(complete_graph(4), (1,), (2,))
    assert members == [] and m == []


def test_c1_lengths_and_signature():
    g = matched_cliques(4)
    X, Y = (0, 2, 5), (1, 2, 5)
    members, m = build_c1(g, X, Y)
    assert len(members) == sum(m)
    for mb in members:
        z, u = mb.via
        assert len(mb.path) == 3
        for c in mb.path.internal:
            assert z not in c and u in c and (0 in c) != (1 in c)
    ok, _ = verify_edge_disjoint([mb.path for mb in members])
    assert ok


def _k4_paths(*seqs):
    g = complete_graph(4)
    return g, [DirectedPath.of(g, s) for s in seqs]


def test_repair_case_1():
    g, N = _k4_paths([0, 1], [0, 3, 1])
    sys_ = repair_menger_system(g, N, 0, 1, [2])
    assert [p.vertices for p in sys_.paths] == [(0, 2, 1), (0, 3, 1)]
    assert sys_.repairs == [(2, 1)]
    assert sys_.check() == []


def test_repair_case_2():
    g, N = _k4_paths([0, 2, 3, 1], [0, 1])
    sys_ = repair_menger_system(g, N, 0, 1, [2])
    assert [p.vertices for p in sys_.paths] == [(0, 2, 1), (0, 1)]
    assert sys_.repairs == [(2, 2)]


def test_repair_case_3_reroutes_and_shortcuts():
    g = build_graph(7, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 6), (6, 2), (2, 4), (4, 3), (3, 5), (5, 1)])
    N = [DirectedPath.of(g, p) for p in ([0, 2, 4, 3, 5, 1], [0, 3, 6, 2, 1], [0, 1])]
    sys_ = repair_menger_system(g, N, 0, 1, [2])
    # 0,3,6,2 + 2,4,3,5,1 revisits 3 and collapses to 0,3,5,1
    assert [p.vertices for p in sys_.paths] == [(0, 2, 1), (0, 3, 5, 1), (0, 1)]
    assert sys_.repairs == [(2, 3)]
    assert sys_.tags == [N_XZY, N_0, N_0]
    assert sys_.check() == []


def test_repair_detour_already_present():
    g, N = _k4_paths([0, 2, 1], [0, 1], [0, 3, 1])
    sys_ = repair_menger_system(g, N, 0, 1, [2])
    assert sys_.repairs == [(2, 0)]
    assert sys_.tags == [N_XZY, N_0, N_0]


def test_repair_nothing_to_do():
    g = cycle_graph(6)
    N = [DirectedPath.of(g, [0, 1]), DirectedPath.of(g, [0, 5, 4, 3, 2, 1])]
    sys_ = repair_menger_system(g, N, 0, 1, [3])
    assert sys_.Z_xy == () and sys_.repairs == []
    assert [p.vertices for p in sys_.paths] == [p.vertices for p in N]
    assert sys_.tags == [N_0, N_GOOD]


def test_repair_rejects_bad_input():
    g, N = _k4_paths([0, 2, 1], [0, 2, 3, 1])
    with pytest.raises(LemmaError):
        repair_menger_system(g, N, 0, 1, [3])
    g, N = _k4_paths([0, 1])
    with pytest.raises(LemmaError):
        repair_menger_system(g, N, 0, 1, [2])


def test_bad_path_classification():
    # 0-1 edge plus the long way 0,2,3,1; token 2 sees only x
    g = build_graph(4, [(0, 1), (0, 2), (2, 3), (3, 1)])
    N = [DirectedPath.of(g, [0, 1]), DirectedPath.of(g, [0, 2, 3, 1])]
    sys_ = repair_menger_system(g, N, 0, 1, [2])
    assert sys_.tags == [N_0, N_BAD]
    assert (sys_.ell, sys_.n0, sys_.nb, sys_.ng) == (0, 1, 1, 0)


def test_c2_detour_lift():
    g = complete_graph(4)
    N = [DirectedPath.of(g, p) for p in ([0, 1], [0, 2, 1], [0, 3, 1])]
    sys_ = repair_menger_system(g, N, 0, 1, [2])
    c2, cg = build_c2_cg(g, sys_, (0, 2), (1, 2))
    assert cg == []
    detour = next(mb.path for mb in c2 if sys_.tags[mb.via[0]] == N_XZY)
    assert detour.configs == ((0, 2), (0, 1), (1, 2))
    assert all(len(mb.path) == len(sys_.paths[mb.via[0]]) for mb in c2)


def test_cg_lift_avoids_swapped_pair():
    g = build_graph(5, [(0, 1), (0, 2), (2, 4), (4, 3), (3, 1)])
    N = [DirectedPath.of(g, [0, 1]), DirectedPath.of(g, [0, 2, 4, 3, 1])]
    sys_ = repair_menger_system(g, N, 0, 1, [4])
    assert sys_.tags == [N_0, N_GOOD]
    _, cg = build_c2_cg(g, sys_, (0, 4), (1, 4))
    (mb,) = cg
    assert mb.path.configs == ((0, 4), (2, 4), (2, 3), (3, 4), (1, 4))
    assert all(0 not in c and 1 not in c for c in mb.path.internal)


def test_construct_c5():
    g = cycle_graph(5)
    cert = construct_family(g, 2, (1, 2), (1, 3))
    assert cert.bound == 2 and cert.achieved >= 2
    tg = TokenGraph(g, 2)
    assert local_edge_connectivity(tg.graph, tg.rank((1, 2)), tg.rank((1, 3))) >= cert.achieved


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_construct_complete(t):
    g = complete_graph(t + 1)
    for k in range(1, t + 1):
        tg = TokenGraph(g, k)
        for X, Y in list(adjacent_pairs(tg))[:12]:
            cert = construct_family(g, k, X, Y, token_graph=tg, lam=t)
            assert cert.achieved >= k * (t - k + 1)


def test_construct_k1():
    g = complete_graph(3)
    cert = construct_family(g, 1, (0,), (1,))
    assert cert.achieved == edge_connectivity(g) == 2
    assert all(mb.tag == "C2" for mb in cert.members)


def test_construct_refuses():
    g = cycle_graph(5)
    with pytest.raises(HypothesisViolation):
        construct_family(g, 3, (0, 1, 2), (0, 1, 3))
    with pytest.raises(NotAdjacentError):
        construct_family(g, 2, (1, 2), (2, 3))


def test_verify_edge_disjoint_reports_clash():
    cert = construct_family(complete_graph(5), 2, (0, 1), (0, 2))
    family = cert.family()
    assert verify_edge_disjoint(family) == (True, None)
    ok, (edge, i, j) = verify_edge_disjoint([family[0], family[0]])
    assert not ok and (i, j) == (0, 1)
    assert edge in family[0].edge_keys()


def test_certificate_catches_tampering():
    g = complete_graph(4)
    tg = TokenGraph(g, 2)
    cert = construct_family(g, 2, (0, 1), (0, 2))
    cert.members.append(cert.members[0])
    problems = cert.verify(tg)
    assert any("share edge" in p for p in problems)
    cert.members[-1] = type(cert.members[0])("C2", LiftedPath(((0, 1), (0, 2)), ((1, 3),)), (0,))
    assert any("does not match" in p for p in cert.verify(tg))


def test_certificate_json_is_stable():
    cert = construct_family(matched_cliques(3), 2, (0, 1), (0, 2))
    d = cert.to_dict()
    assert list(d)[:7] == ["schema", "X", "Y", "k", "lambda_G", "bound", "achieved"]
    assert d["schema"] == 1
    assert json.loads(json.dumps(d)) == d
    assert sum(len(v) for v in d["families"].values()) == d["achieved"]
    assert d["achieved"] == sum(d["m"]) + d["ell"] + d["n0"] + d["ng"]


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=8, connected=True), st.data())
def test_construct_random(g, data):
    lam = edge_connectivity(g)
    k = data.draw(st.integers(1, max(1, min(lam, g.n - 1))))
    assume(k <= lam)
    tg = TokenGraph(g, k)
    pairs = list(adjacent_pairs(tg))
    X, Y = data.draw(st.sampled_from(pairs))
    cert = construct_family(g, k, X, Y, token_graph=tg, lam=lam)
    assert cert.verify(tg) == []
    s = cert.system
    assert s.t == lam == s.ell + s.n0 + s.nb + s.ng
    assert s.nb <= k - 1 - s.ell
    assert sum(cert.m) >= (k - 1) * (lam - k + 1) - s.ell
    assert cert.achieved >= k * (lam - k + 1)
    assert cert.achieved <= local_edge_connectivity(tg.graph, tg.rank(X), tg.rank(Y))


def test_construct_bad_sizes():
    with pytest.raises(LemmaError):
        construct_family(cycle_graph(5), 2, (1,), (2,))
    with pytest.raises(Exception):
        construct_family(Graph(3, [(0, 1), (1, 2)]), 1, (0,), (9,))


def test_certificate_error_carries_problems():
    err = CertificateError(["a", "b"])
    assert err.problems == ["a", "b"] and "a; b" in str(err)
