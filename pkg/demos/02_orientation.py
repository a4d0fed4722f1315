"""
Low-outdegree orientation
=========================

Orient every edge so no vertex has more than ceil((1 + eps) a*) out-edges,
and read the simulated LOCAL round count from the ledger.
"""
import math
from fractions import Fraction

from arbor.generators import random_forest_union
from arbor.oracles import pseudo_arboricity
from arbor.orientation import low_outdegree_orientation
from arbor.runtime import RoundLedger

g = random_forest_union(1024, 5, seed=0)
a_star = pseudo_arboricity(g)[0].value
for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 4)):
    ledger = RoundLedger()
    run = low_outdegree_orientation(g, eps, stream=0, ledger=ledger, a_star=a_star)
    print(f"eps={eps}: max outdegree {run.orientation.max_outdegree()} "
          f"(bound {math.ceil(a_star * (1 + eps))}), {run.reversals} path reversals, "
          f"{ledger.total_rounds} rounds")

# the ledger keeps one entry per phase
for phase in ledger.phases[:5]:
    print("  ", phase.label, phase.rounds)
