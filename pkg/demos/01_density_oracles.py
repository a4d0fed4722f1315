"""
Arboricity and pseudo-arboricity
================================

Exact subset formulas on small graphs, the flow oracle on larger ones.
"""
from arbor.generators import complete, gnp, path_multigraph
from arbor.oracles import degeneracy, nash_williams_arboricity, pseudo_arboricity

# K4 needs two forests but admits an orientation with outdegree 2
k4 = complete(4)
print("K4: a =", nash_williams_arboricity(k4).value, " a* =", pseudo_arboricity(k4)[0].value)

# parallel edges push arboricity up much faster than pseudo-arboricity
bundle = path_multigraph(3, 4)
cert, orient = pseudo_arboricity(bundle)
print("3-vertex path with 4 parallel edges per link: a* =", cert.value,
      " witness", cert.witness_vertices, " max outdegree", orient.max_outdegree())

# beyond 18 vertices only the flow oracle and degeneracy are available
g = gnp(500, 0.02, seed=1)
print("gnp(500, 0.02): a* =", pseudo_arboricity(g)[0].value, " degeneracy =", degeneracy(g)[0])
