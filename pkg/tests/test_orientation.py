import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from arbor.generators import gnp, path_multigraph, random_forest_union
from arbor.graph import MultiGraph, ball
from arbor.oracles import pseudo_arboricity
from arbor.orientation import (NoSinkFoundError, PatchStats, find_reversal_path, low_outdegree_orientation, make_threshold,
                               patch_orientation, reverse_path)
from arbor.runtime import RoundLedger
from arbor.structures import Orientation
from arbor.verify import check_orientation

from conftest import multigraphs


def test_reversal_path_one_hop():
    g = MultiGraph(2, [(0, 1)] * 3)
    psi = Orientation(g, [True] * 3)
    verts, edges = find_reversal_path(g, psi, 0, make_threshold(1, 0))
    assert verts == [0, 1] and len(edges) == 1


def test_reversal_path_unique_walk():
    g = MultiGraph(3, [(0, 1), (0, 1), (1, 2)])
    psi = Orientation(g, [True] * 3)
    verts, edges = find_reversal_path(g, psi, 0, make_threshold(1, 0))
    assert verts == [0, 1, 2] and edges[-1] == 2


def test_no_sink():
    g = MultiGraph(2, [(0, 1)] * 2)
    psi = Orientation(g, [True, False])
    with pytest.raises(NoSinkFoundError):
        find_reversal_path(g, psi, 0, make_threshold(1, 0))


@given(multigraphs(max_n=8, max_m=20), st.data())
def test_reverse_path_moves_one_unit(g, data):
    psi = Orientation(g, data.draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m)))
    before = psi.outdegrees()
    v = data.draw(st.integers(0, g.n - 1))
    try:
        verts, edges = find_reversal_path(g, psi, v, make_threshold(0, Fraction(1, 2)))
    except NoSinkFoundError:
        return
    out = list(before)
    reverse_path(psi, edges, out)
    assert out == psi.outdegrees()
    changed = [x for x in range(g.n) if out[x] != before[x]]
    if edges:
        assert sorted(changed) == sorted({verts[0], verts[-1]})


def test_patch_nothing_to_do():
    g = path_multigraph(4, 1)
    psi = Orientation.toward_higher(g)
    assert patch_orientation(g, psi, range(4), make_threshold(1, 0)) == psi


def test_patch_two_reversals():
    g = MultiGraph(2, [(0, 1)] * 4)
    psi = Orientation(g, [True] * 4)
    led = RoundLedger()
    out = patch_orientation(g, psi, [0], make_threshold(2, 0), led)
    assert out.outdegrees() == [2, 2]
    assert sum(out.tail(e) != psi.tail(e) for e in range(4)) == 2


def test_patch_leaves_far_edges_alone():
    g = MultiGraph(30, [(0, 1)] * 4 + [(i, i + 1) for i in range(1, 29)])
    psi = Orientation.toward_higher(g)
    stats = PatchStats()
    out = patch_orientation(g, psi, [0], make_threshold(2, 0), stats=stats)
    assert out.outdegrees()[0] == 2 and stats.longest_path == 2
    near = ball(g, [0], stats.longest_path)
    for e, (u, v) in enumerate(g.edges):
        if u not in near and v not in near:
            assert out.tail(e) == psi.tail(e)


@pytest.mark.parametrize("g,eps,bound", [
    (MultiGraph(3, [(0, 1), (1, 2), (0, 2)]), Fraction(1, 2), 2),
    (MultiGraph(2, [(0, 1)] * 6), Fraction(1, 3), 4),
])
def test_orientation_examples(g, eps, bound):
    run = low_outdegree_orientation(g, eps, 1)
    assert run.orientation.max_outdegree() <= bound


def test_edgeless():
    run = low_outdegree_orientation(MultiGraph(4, []), Fraction(1, 2))
    assert run.reversals == 0 and run.orientation.to_json() == []


@pytest.mark.parametrize("seed", range(4))
def test_orientation_bound_on_random_graphs(seed):
    g = gnp(120, 0.08, seed) if seed % 2 else random_forest_union(120, 4, seed)
    a_star = pseudo_arboricity(g)[0].value
    for eps in (1, Fraction(1, 2), Fraction(1, 4)):
        led = RoundLedger()
        run = low_outdegree_orientation(g, eps, seed, led)
        assert check_orientation(g, run.orientation, math.ceil(a_star * (1 + eps))).ok
        assert led.total_rounds > 0
