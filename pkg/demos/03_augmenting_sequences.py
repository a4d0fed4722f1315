"""
Augmenting sequences
====================

Color one more edge of a partial forest decomposition by recoloring a
chain of edges found with a layered search.
"""
from arbor.augmentation import apply_augmentation, find_almost_augmenting, is_augmenting_sequence, shortcut
from arbor.graph import MultiGraph
from arbor.structures import PaletteSet, PartialColoring
from arbor.verify import check_forest_decomposition

# three parallel edges; edge 2 is uncolored and both of its colors close a cycle
g = MultiGraph(2, [(0, 1)] * 3)
palettes = PaletteSet([[1, 3], [2], [1, 2]])
coloring = PartialColoring([1, 2, None])

seq = find_almost_augmenting(g, coloring, palettes, 2)
print("search found edges", seq.edges, "ending in color", seq.final_color, "layers", seq.layers)
seq = shortcut(g, coloring, seq, palettes)
print("valid:", is_augmenting_sequence(g, coloring, palettes, seq).valid)

after = apply_augmentation(g, coloring, seq, palettes)
print("before", coloring.colors, "after", after.colors)
print("still forests:", check_forest_decomposition(g, after, palettes).ok)
