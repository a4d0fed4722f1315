from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from arbor.basic import acyclic_orientation, star_forest_3t
from arbor.generators import path_multigraph, random_forest_union, star
from arbor.graph import MultiGraph
from arbor.oracles import pseudo_arboricity
from arbor.structures import Orientation, PartialColoring
from arbor.verify import (BudgetExceededError, CyclicColorClassError, check_forest_decomposition,
                          check_leftover_witness, check_orientation, check_star_forest, color_class_diameters,
                          exhaustive_min_diameter_fd, max_diameter, path_multigraph_color_bound)

from conftest import multigraphs, nx_color_classes_are_forests, nx_max_diameter


def test_forest_checker_examples(triangle):
    bad = check_forest_decomposition(triangle, [1, 1, 1])
    assert not bad.ok and bad.violations[0][0] == ("color", 1)
    good = check_forest_decomposition(triangle, [1, 1, 2])
    assert good.ok and good.metrics["colors"] == 2


def test_star_checker_examples():
    path = path_multigraph(4, 1)
    assert not check_star_forest(path, [0, 0, 0]).ok
    matching = MultiGraph(4, [(0, 1), (2, 3)])
    assert check_star_forest(matching, [0, 0]).ok
    g = random_forest_union(40, 2, 1)
    assert check_star_forest(g, star_forest_3t(g, Fraction(1, 2))).ok


def test_diameters():
    assert color_class_diameters(MultiGraph(2, [(0, 1)]), [0]) == {0: 1}
    assert max_diameter(star(5), [0] * 5) == 2
    assert max_diameter(path_multigraph(10, 1), [3] * 9) == 9
    with pytest.raises(CyclicColorClassError):
        max_diameter(MultiGraph(3, [(0, 1), (1, 2), (0, 2)]), [0, 0, 0])


@pytest.mark.parametrize("coloring", [[0], [0, 1, 2, 3], ["x", 0, 0], [None, None, None], [-1, 0, 0], [1.5, 0, 0]])
def test_checkers_are_total(triangle, coloring):
    for check in (check_forest_decomposition, check_star_forest):
        report = check(triangle, coloring)
        assert isinstance(report.ok, bool)


@given(multigraphs(max_n=8, max_m=16), st.data())
def test_checker_agrees_with_networkx(g, data):
    coloring = data.draw(st.lists(st.integers(0, 3), min_size=g.m, max_size=g.m))
    ours = check_forest_decomposition(g, coloring).ok
    assert ours == nx_color_classes_are_forests(g, coloring)
    if ours:
        assert max_diameter(g, coloring) == nx_max_diameter(g, coloring)


def test_orientation_checker():
    g = star(3)
    toward_center = Orientation(g, [False] * 3)
    assert check_orientation(g, toward_center, 1).ok
    assert not check_orientation(g, Orientation(g, [True] * 3), 1).ok
    h = random_forest_union(30, 3, 2)
    cert, psi = pseudo_arboricity(h)
    assert check_orientation(h, psi, cert.value).ok
    rep = check_orientation(h, acyclic_orientation(h, Fraction(1, 2)), h.m, require_acyclic=True)
    assert rep.ok and rep.metrics["acyclic"] == 1


def test_leftover_witness():
    g = path_multigraph(3, 2)
    assert check_leftover_witness(g, {0: 0, 1: 0}, 2).ok
    assert not check_leftover_witness(g, {0: 0, 1: 0}, 1).ok
    assert not check_leftover_witness(g, {0: 2}, 5).ok


def test_exhaustive_examples():
    assert exhaustive_min_diameter_fd(path_multigraph(4, 2), 2) == 3
    assert exhaustive_min_diameter_fd(path_multigraph(2, 2), 2) == 1
    two = exhaustive_min_diameter_fd(path_multigraph(5, 2), 2)
    three = exhaustive_min_diameter_fd(path_multigraph(5, 2), 3)
    assert three < two == 4
    assert exhaustive_min_diameter_fd(path_multigraph(3, 3), 2) is None
    with pytest.raises(BudgetExceededError):
        exhaustive_min_diameter_fd(path_multigraph(5, 4), 4, budget=1000)


def test_color_bound_formula():
    assert path_multigraph_color_bound(5, 2, 2, 4)
    assert not path_multigraph_color_bound(50, 2, 2, 1)


@given(multigraphs(max_n=5, max_m=7), st.integers(1, 3))
def test_exhaustive_matches_plain_enumeration(g, k):
    import itertools
    best = None
    for coloring in itertools.product(range(k), repeat=g.m):
        if nx_color_classes_are_forests(g, coloring):
            d = nx_max_diameter(g, coloring)
            best = d if best is None else min(best, d)
    if g.m == 0:
        best = 0
    assert exhaustive_min_diameter_fd(g, k) == best
