"""Forest, star-forest and low-outdegree decompositions in a simulated LOCAL model."""

from .augmentation import AugmentingSequence, apply_augmentation, color_edge_set, find_almost_augmenting
from .basic import acyclic_orientation, greedy_lfd, h_partition, lsfd_4eps, reduce_forest_diameter, star_forest_3t
from .forest import combine_fd, combine_lfd, forest_decomposition_main, vertex_color_split
from .generators import GeneratorSpec, generate, path_multigraph, random_forest_union
from .graph import MultiGraph
from .netdecomp import network_decomposition, stochastic_decomposition
from .oracles import nash_williams_arboricity, pseudo_arboricity
from .orientation import low_outdegree_orientation
from .runtime import RandomStream, RoundLedger
from .star import star_forest_decomposition
from .structures import Orientation, PaletteSet, PartialColoring
from .verify import check_forest_decomposition, check_orientation, check_star_forest, max_diameter

__version__ = "0.1.0"
