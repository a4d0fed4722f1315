"""
Network decompositions
======================

Deterministic-style (D, chi) decompositions and the stochastic variant
that keeps each edge with probability at least 1 - beta.
"""
from arbor.generators import cycle, gnp
from arbor.netdecomp import check_network_decomposition, network_decomposition, stochastic_decomposition

g = gnp(300, 0.01, seed=4)
nd = network_decomposition(g, stream=4)
print(f"{len(nd.clusters())} clusters in {nd.chi} classes, problems: {check_network_decomposition(g, nd)}")

# on a small-diameter graph one large shift swallows each component; a long cycle shows the cuts
ring = cycle(2000)
beta = 0.2
sd = stochastic_decomposition(ring, beta, stream=4)
print(f"stochastic: kept {len(sd.kept_edges)} of {ring.m} edges at beta={beta}, "
      f"{len(set(sd.component_of))} pieces, diameter bound {sd.D}")
