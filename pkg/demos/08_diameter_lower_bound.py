"""
Diameter lower bound on path multigraphs
========================================

With exactly k colors every tree of a k-forest decomposition of the
doubled path must span the whole path; extra colors help, but only so much.
"""
from fractions import Fraction

from arbor.generators import path_multigraph
from arbor.verify import exhaustive_min_diameter_fd, path_multigraph_color_bound

k = 2
for l in range(2, 6):
    g = path_multigraph(l, k)
    tight = exhaustive_min_diameter_fd(g, k)
    extra = exhaustive_min_diameter_fd(g, k + 1)
    print(f"l={l}: min diameter {tight} with {k} colors, {extra} with {k + 1}; "
          f"counting bound holds: {path_multigraph_color_bound(l, k, float(k * (1 + Fraction(1, 2))), extra)}")
