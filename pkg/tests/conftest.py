import itertools
import math

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arbor.graph import MultiGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def multigraphs(draw, max_n=9, max_m=20, simple=False, min_m=0):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if simple:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_m, len(pairs)),
                               max_size=min(max_m, len(pairs))))
    else:
        chosen = draw(st.lists(st.sampled_from(pairs), min_size=min_m, max_size=max_m))
    return MultiGraph(n, chosen)


def brute_arboricity(g: MultiGraph) -> int:
    """Nash-Williams formula by a second, independent subset loop."""
    best = 0
    for size in range(2, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            s = set(subset)
            m = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, -(-m // (size - 1)))
    return best


def brute_pseudo_arboricity(g: MultiGraph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            s = set(subset)
            m = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, -(-m // size))
    return best


def to_nx(g: MultiGraph, edges=None) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for e in (range(g.m) if edges is None else edges):
        u, v = g.edges[e]
        h.add_edge(u, v, key=e)
    return h


def nx_color_classes_are_forests(g: MultiGraph, coloring) -> bool:
    classes = {}
    for e in range(g.m):
        if coloring[e] is not None:
            classes.setdefault(coloring[e], []).append(e)
    return all(nx.is_forest(to_nx(g, es)) for es in classes.values())


def nx_max_diameter(g: MultiGraph, coloring) -> int:
    classes = {}
    for e in range(g.m):
        if coloring[e] is not None:
            classes.setdefault(coloring[e], []).append(e)
    best = 0
    for es in classes.values():
        h = nx.Graph()
        h.add_edges_from(g.edges[e] for e in es)
        for comp in nx.connected_components(h):
            best = max(best, nx.diameter(h.subgraph(comp)))
    return best


def log2n(n):
    return max(1, math.ceil(math.log2(max(n, 2))))


@pytest.fixture
def triangle():
    return MultiGraph(3, [(0, 1), (1, 2), (0, 2)])


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
