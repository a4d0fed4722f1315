import math
from fractions import Fraction

import numpy as np
import pytest

from arbor.forest import (CUTS, CutScope, CutState, NotGoodError, PreconditionError, combine_fd, combine_lfd,
                          cross_component_violations, cut_diameter, cut_random_depth, cut_random_outedge,
                          forest_decomposition_main, is_good, make_params, run_until_good, select_strategy,
                          split_bounds, vertex_color_split)
from arbor.generators import gnp, path_multigraph, random_forest_union
from arbor.graph import MultiGraph, ball
from arbor.oracles import pseudo_arboricity
from arbor.runtime import RandomStream, RoundLedger
from arbor.structures import PaletteSet, PartialColoring
from arbor.verify import check_forest_decomposition

from conftest import nx_color_classes_are_forests

HALF = Fraction(1, 2)


def one_color_path(n):
    g = path_multigraph(n, 1)
    return g, PartialColoring([0] * g.m)


def test_strategy_selection():
    assert select_strategy(HALF, 40, 1000, 10, True) == "random_depth"
    assert select_strategy(HALF, 40, 1000, 10, False) == "diameter"
    assert select_strategy(HALF, 4, 1000, 10, True) == "random_outedge"


def test_params_overrides():
    g = path_multigraph(10, 2)
    p = make_params(g, HALF, 2, strategy="random_depth", check_pre=False, overrides={"R": 6, "R_prime": 2})
    assert (p.R, p.R_prime, p.N) == (6, 2, 3)
    with pytest.raises(ValueError):
        make_params(g, HALF, 2, strategy="random_outedge", overrides={"bogus": 1})
    with pytest.raises(PreconditionError):
        make_params(g, HALF, 2, strategy="random_depth")


def test_edgeless_main():
    g = MultiGraph(5, [])
    p = make_params(g, HALF, 1, strategy="random_outedge")
    run = forest_decomposition_main(g, PaletteSet([]), p)
    assert run.good and run.leftover == set() and run.coloring.colors == []


def test_main_random_depth_example():
    g = random_forest_union(300, 4, 1)
    eps = HALF
    p = make_params(g, eps, 4, strategy="random_depth", check_pre=False)
    run = run_until_good(g, PaletteSet.uniform(g.m, 6, start=1), p, stream=3)
    col = run.coloring
    assert all(col[e] is not None for e in range(g.m) if e not in run.leftover)
    assert check_forest_decomposition(g, col, require_total=False).ok
    if run.leftover:
        sub, _ = g.edge_subgraph(sorted(run.leftover))
        assert pseudo_arboricity(sub)[0].value <= math.ceil(eps * 4)


@pytest.mark.parametrize("strategy", ["random_depth", "random_outedge", "diameter"])
def test_main_with_many_clusters(strategy):
    g = path_multigraph(60, 20)
    over = {"R": 6, "R_prime": 2}
    if strategy == "random_outedge":
        over["p"] = 0.5
    if strategy == "diameter":
        over["eps_cut"] = HALF
    p = make_params(g, HALF, 20, strategy=strategy, check_pre=False, overrides=over)
    led = RoundLedger()
    run = run_until_good(g, PaletteSet.uniform(g.m, 30), p, stream=5, ledger=led)
    assert run.clusters > 1 and run.good
    assert check_forest_decomposition(g, run.coloring, require_total=False).ok
    assert nx_color_classes_are_forests(g, run.coloring.colors)
    assert set(run.coloring.uncolored()) == run.leftover
    assert set(run.state.removed) == run.leftover
    assert any(label.startswith("fd:class") for label in (ph.label for ph in led.phases))


def test_sabotaged_cut_is_detected_and_retried():
    g = path_multigraph(60, 20)
    p = make_params(g, HALF, 20, strategy="random_depth", check_pre=False, overrides={"R": 6, "R_prime": 2})
    calls = []

    def sabotage(scope, params, stream, state):
        calls.append(stream)
        return set()

    log = []
    with pytest.raises(NotGoodError):
        run_until_good(g, PaletteSet.uniform(g.m, 30), p, sabotage, 1, max_retries=2, log=log)
    assert len(log) == 3 and all("not good" in line for line in log)

    # failing only on the first attempt: the retry with a fresh stream succeeds
    def flaky(scope, params, stream, state):
        if stream.path[0] == ("main", 0):
            return set()
        return cut_random_depth(scope, params, stream, state)

    log = []
    run = run_until_good(g, PaletteSet.uniform(g.m, 30), p, flaky, 1, max_retries=2, log=log)
    assert run.good and run.retries == 1 and len(log) == 1


def test_cut_random_depth_trace():
    g, col = one_color_path(11)
    p = make_params(g, HALF, 1, strategy="random_depth", check_pre=False, overrides={"N": 3})
    scope = CutScope(g, col, [0], {0}, set(range(11)))
    state = CutState.initialize(g, p)
    stream = RandomStream(4)
    J = int(stream.derive("depth", 0).generator().integers(1, 4))
    removed = cut_random_depth(scope, p, stream, state)
    assert removed == {e for e in range(10) if (e + 1) % 3 == J % 3}
    assert all(state.removed[e] == e + 1 for e in removed)  # charged to the child
    gaps = sorted(removed) + [10]
    assert max(b - a for a, b in zip([-1] + gaps, gaps)) - 1 <= 6


def test_cut_random_depth_empty_annulus():
    g, col = one_color_path(5)
    p = make_params(g, HALF, 1, strategy="random_depth", check_pre=False)
    state = CutState.initialize(g, p)
    assert cut_random_depth(CutScope(g, col, [0], set(range(5)), set(range(5))), p, 0, state) == set()


def test_cut_random_outedge_guards():
    g = path_multigraph(8, 3)
    col = PartialColoring([0] * g.m)
    p = make_params(g, Fraction(2, 3), 3, strategy="random_outedge", overrides={"p": 1.0})
    state = CutState.initialize(g, p)
    scope = CutScope(g, col, [0], {0}, set(range(8)))
    removed = cut_random_outedge(scope, p, RandomStream(0), state)
    with_out = {v for v in range(8) if state.J.out_edges(v)}
    assert {state.removed[e] for e in removed} == with_out
    # a vertex at the load limit is never chosen again
    state.load = [2] * 8
    assert cut_random_outedge(scope, p, RandomStream(1), state) == set()


def test_cut_diameter_breaks_long_paths():
    g, col = one_color_path(900)
    p = make_params(g, HALF, 1, strategy="diameter", check_pre=False, overrides={"eps_cut": HALF, "R_prime": 2})
    threshold = math.ceil(p.c_len * 10 / p.eps_cut)
    p.R = 2 * threshold + 1
    inner = ball(g, [0], p.R_prime)
    outer = ball(g, [0], p.R + p.R_prime)
    state = CutState.initialize(g, p)
    scope = CutScope(g, col, [0], inner, outer)
    assert not is_good(g, col, inner, outer)
    for e in cut_diameter(scope, p, RandomStream(2), state):
        col[e] = None
    assert is_good(g, col, inner, outer)


@pytest.mark.parametrize("g,eps,a,bound", [
    (random_forest_union(400, 6, 0), Fraction(3, 5), 6, 10),
    (path_multigraph(100, 4), Fraction(1), 4, 8),
])
def test_combine_fd_examples(g, eps, a, bound):
    res = combine_fd(g, eps, 1, a_bound=a)
    assert res.report.ok and res.coloring.is_total()
    assert res.colors <= bound
    assert nx_color_classes_are_forests(g, res.coloring.colors)


def test_combine_fd_rejects_small_eps_a():
    with pytest.raises(PreconditionError):
        combine_fd(path_multigraph(5, 3), HALF, a_bound=3)


def test_combine_fd_diameter_modes():
    g = random_forest_union(200, 6, 2)
    for mode in ("log", "inverse"):
        res = combine_fd(g, Fraction(3, 5), 2, a_bound=6, diameter=mode)
        assert res.report.ok


def synthetic_palettes(m, a, eps, seed):
    size = math.ceil((1 + eps) * a)
    return PaletteSet.random(m, 3 * a, size, np.random.default_rng(seed))


def test_split_examples():
    g = path_multigraph(500, 2)
    pal = synthetic_palettes(g.m, 200, HALF, 0)
    with pytest.raises(ValueError):
        vertex_color_split(g, pal, 0, a=200)
    log = []
    split = vertex_color_split(g, pal, HALF, "stochastic", 1, a=200, log=log)
    assert len(log) == split.attempts - 1
    low0, low1 = split_bounds("stochastic", HALF, 200)
    for e in range(g.m):
        q0, q1 = split.induced(g, pal, e)
        assert len(q0) >= low0 and len(q1) >= low1
        assert not set(q0) & set(q1)
        assert set(q0) | set(q1) <= set(pal[e])


def test_split_independent_mode():
    g = path_multigraph(40, 2)
    pal = synthetic_palettes(g.m, 400, HALF, 2)
    split = vertex_color_split(g, pal, HALF, "independent", 3, a=400)
    low0, low1 = split_bounds("independent", HALF, 400)
    for e in range(g.m):
        q0, q1 = split.induced(g, pal, e)
        assert len(q0) >= low0 and len(q1) >= low1


def test_combine_lfd_uniform_palettes_is_fd():
    g = path_multigraph(5, 400)
    a = 400
    pal = PaletteSet.uniform(g.m, math.ceil(Fraction(3, 2) * a))
    res = combine_lfd(g, pal, HALF, 0, a=a)
    assert res.report.ok and res.coloring.is_total()
    assert res.coloring.num_colors() <= math.ceil(Fraction(3, 2) * a)


def test_combine_lfd_random_palettes():
    g = path_multigraph(5, 400)
    pal = synthetic_palettes(g.m, 400, HALF, 1)
    res = combine_lfd(g, pal, HALF, 1, a=400)
    assert res.report.ok
    assert all(res.coloring[e] in pal[e] for e in range(g.m))
    part_of = [1 if e in res.second_part else 0 for e in range(g.m)]
    assert cross_component_violations(g, res.coloring, part_of) == []


def test_cross_component_scan():
    g = path_multigraph(3, 1)
    assert cross_component_violations(g, PartialColoring([0, 0]), [0, 1]) == [(0, 1)]
    assert cross_component_violations(g, PartialColoring([0, 1]), [0, 1]) == []
