"""
Star-forest decomposition
=========================

Split a simple graph into star forests using sampled centers and one
bipartite matching per vertex.
"""
from fractions import Fraction

from arbor.generators import gnp
from arbor.oracles import pseudo_arboricity
from arbor.star import star_forest_decomposition
from arbor.verify import check_star_forest

g = gnp(80, 0.15, seed=2)
a = pseudo_arboricity(g)[0].value + 1
run = star_forest_decomposition(g, Fraction(1, 2), "sfd", stream=2, a=a, test_mode=True)
print(f"a={a}: {run.colors} star forests, c = {run.c_bound:.2f}, "
      f"deficit {run.max_deficit} <= delta {run.delta}, leftover edges {len(run.leftover)}")
print("valid:", check_star_forest(g, run.coloring).ok)
