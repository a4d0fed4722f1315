"""
Forest decomposition with (1 + eps) a colors
============================================

Main pass with a tenth of the slack, leftover recolored with fresh colors,
then optionally a diameter reduction.
"""
from fractions import Fraction

from arbor.forest import combine_fd
from arbor.generators import random_forest_union
from arbor.verify import max_diameter

g = random_forest_union(400, 6, seed=3)
eps = Fraction(1, 2)

res = combine_fd(g, eps, stream=3, a_bound=6)
print(f"{res.colors} colors (budget {int((1 + eps) * 6)}), strategy {res.strategy}, "
      f"leftover edges {len(res.main.leftover)}, valid {res.report.ok}")
print("largest tree diameter:", max_diameter(g, res.coloring))

# the diameter modes trade a few extra colors for shorter trees
for mode in ("log", "inverse"):
    res = combine_fd(g, Fraction(3, 5), stream=3, a_bound=6, diameter=mode)
    print(f"diameter={mode}: {res.colors} colors, max diameter {max_diameter(g, res.coloring)}, valid {res.report.ok}")
