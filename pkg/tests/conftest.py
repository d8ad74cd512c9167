import pytest
from hypothesis import strategies as st

from tokengraphs.corpus import random_corpus
from tokengraphs.graph import Graph

CORPUS_SEED = 2024


@st.composite
def graphs(draw, min_n=2, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if connected:
        # a spanning path keeps the draw connected without biasing the rest
        order = draw(st.permutations(range(n)))
        edges += list(zip(order, order[1:]))
    return Graph(n, edges)


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(200, seed=CORPUS_SEED)


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion."""
    name = request.node.name
    record = {"label": name, "detail": ""}
    ACCEPTANCE[name] = record
    yield record
    rep = getattr(request.node, "rep_call", None)
    record["passed"] = bool(rep and rep.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for record in ACCEPTANCE.values():
        verdict = "PASS" if record.get("passed") else "FAIL"
        terminalreporter.write_line(f"{verdict}  {record['label']}  {record['detail']}")
