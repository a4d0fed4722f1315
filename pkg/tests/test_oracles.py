import networkx as nx
import pytest
from hypothesis import given

from arbor.generators import complete, cycle, k4_expanded, lower_bound_G, path_multigraph, star
from arbor.graph import MultiGraph
from arbor.oracles import (GraphTooLargeError, arboricity_bound, degeneracy, degeneracy_orientation,
                           hakimi_pseudo_arboricity, nash_williams_arboricity, pseudo_arboricity)

from conftest import brute_arboricity, brute_pseudo_arboricity, multigraphs


def test_k4():
    g = complete(4)
    assert nash_williams_arboricity(g).value == 2
    assert degeneracy(g)[0] == 3
    assert pseudo_arboricity(g)[0].value == 2


def test_five_parallel_edges():
    g = MultiGraph(2, [(0, 1)] * 5)
    assert pseudo_arboricity(g)[0].value == 3
    assert nash_williams_arboricity(g).value == 5


def test_path_multigraph_pseudo_arboricity():
    # [DERIVED] densest subgraph is the whole path: 8 edges / 3 vertices
    assert pseudo_arboricity(path_multigraph(3, 4))[0].value == 3
    assert brute_pseudo_arboricity(path_multigraph(3, 4)) == 3


def test_lower_bound_G_arboricity():
    # [DERIVED] brute force over all vertex subsets
    g = lower_bound_G(4, 3)
    assert nash_williams_arboricity(g).value == 4 == brute_arboricity(g)


def test_trees_and_cycles():
    assert nash_williams_arboricity(star(6)).value == 1
    assert pseudo_arboricity(cycle(7))[0].value == 1
    assert nash_williams_arboricity(cycle(7)).value == 2


def test_exact_limit():
    with pytest.raises(GraphTooLargeError):
        nash_williams_arboricity(cycle(19))


def test_arboricity_bound_large_graphs():
    assert arboricity_bound(k4_expanded(3)) == pseudo_arboricity(k4_expanded(3))[0].value + 1
    g = path_multigraph(20, 4)
    assert arboricity_bound(g) == 2 * pseudo_arboricity(g)[0].value


@given(multigraphs(max_n=7, max_m=14))
def test_oracles_match_brute_force(g):
    assert nash_williams_arboricity(g).value == brute_arboricity(g)
    cert, psi = pseudo_arboricity(g)
    assert cert.value == brute_pseudo_arboricity(g) == hakimi_pseudo_arboricity(g).value
    if g.m:
        assert psi.max_outdegree() == cert.value
        assert cert.recompute(g, "pseudo") == cert.value
        assert nash_williams_arboricity(g).recompute(g, "arboricity") == nash_williams_arboricity(g).value


@given(multigraphs(max_n=9, max_m=25))
def test_degeneracy_matches_core_number(g):
    value, order = degeneracy(g)
    if g.is_simple():
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(range(g.n))
        assert value == max(nx.core_number(h).values(), default=0)
    psi = degeneracy_orientation(g, order)
    assert psi.is_acyclic()
    assert psi.max_outdegree() <= value
