"""
List forest decomposition
=========================

Every edge brings its own palette; the result colors each edge from its
palette with every color class a forest.
"""
import math
from fractions import Fraction

import numpy as np

from arbor.forest import combine_lfd
from arbor.generators import path_multigraph
from arbor.structures import PaletteSet

a = 400
eps = Fraction(1, 2)
g = path_multigraph(5, a)  # 400 parallel edges per link: a = 400
palettes = PaletteSet.random(g.m, 3 * a, math.ceil((1 + eps) * a), np.random.default_rng(0))

res = combine_lfd(g, palettes, eps, stream=0, a=a)
print("valid:", res.report.ok, " every edge in its palette:",
      all(res.coloring[e] in palettes[e] for e in range(g.m)))
print("stages:", res.stages)
