"""Star-forest decompositions of simple graphs from per-vertex matchings.

Every vertex v picks a set C_v of colors for which it is a leaf; it is a
center for all other colors. Given a t-orientation, v matches each of its
out-neighbors u to a color c with c in C_v, c not in C_u and c in Q(uv), and
the edge vu gets color c. A matched out-edge always runs from a c-leaf to a
c-center and each leaf has at most one such edge per color, so every color
class is a star forest. Unmatched out-edges form a leftover graph whose
out-degree is bounded by the matching deficit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .basic import star_forest_3t
from .graph import MultiGraph
from .lll import distributed_lll
from .oracles import arboricity_bound, pseudo_arboricity
from .orientation import low_outdegree_orientation
from .runtime import RoundLedger, as_stream
from .structures import Orientation, PaletteSet, PartialColoring
from .util import PreconditionError, ceil_frac, check_eps, frac

C_SFD = 100  # a eps >= C_SFD (sqrt(log Delta) + log a)
C_LSFD = 10 ** 6  # a eps >= C_LSFD log Delta
LSFD_EPS_MAX = Fraction(1, 10 ** 6)
LSFD_PALETTE_FACTOR = 200  # |Q(e)| >= a (1 + 200 eps)


class NotSimpleError(ValueError):
    pass


class MatchingDeficitError(ValueError):
    def __init__(self, vertex: int, deficit: int, delta: int):
        super().__init__(f"vertex {vertex} leaves {deficit} out-edges unmatched, more than delta = {delta}")
        self.vertex = vertex
        self.deficit = deficit


@dataclass
class CenterAssignment:
    """leaf_colors[v] = C_v: v is a c-leaf for c in C_v and a c-center otherwise."""

    leaf_colors: list[frozenset]
    colors: tuple[int, ...] = ()

    def is_leaf(self, v: int, c: int) -> bool:
        return c in self.leaf_colors[v]

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "leaf_colors": [sorted(s) for s in self.leaf_colors]}

    @classmethod
    def from_json(cls, doc) -> "CenterAssignment":
        return cls([frozenset(s) for s in doc["leaf_colors"]], tuple(doc.get("colors", ())))


@dataclass
class LocalBipartite:
    """Colors on the left, the t out-slots of v on the right; slots[i] is (u, edge) or None for padding."""

    vertex: int
    colors: tuple[int, ...]
    slots: list[tuple[int, int] | None]
    options: list[tuple[int, ...]]  # per slot, adjacent colors in increasing order

    @property
    def edges(self) -> set[tuple[int, int]]:
        """(color, neighbor) pairs."""
        return {(c, s[0]) for s, opts in zip(self.slots, self.options) if s is not None for c in opts}

    @property
    def real_slots(self) -> int:
        return sum(s is not None for s in self.slots)


def _require_simple(g: MultiGraph) -> None:
    if not g.is_simple():
        raise NotSimpleError("star-forest decomposition by matchings needs a simple graph")


def build_hv(g: MultiGraph, A: Orientation, centers: CenterAssignment, palettes: PaletteSet | None, v: int,
             t: int | None = None) -> LocalBipartite:
    """Bipartite graph of v: color c joins out-neighbor u iff c in C_v, c not in C_u and c in Q(uv)."""
    _require_simple(g)
    outs = sorted(A.out_edges(v), key=lambda e: A.head(e))
    if t is None:
        t = len(outs)
    if len(outs) > t:
        raise PreconditionError(f"vertex {v} has outdegree {len(outs)} above t = {t}")
    colors = tuple(sorted(centers.colors)) if centers.colors else tuple(range(t))
    leaf_v = centers.leaf_colors[v]
    slots: list[tuple[int, int] | None] = []
    options: list[tuple[int, ...]] = []
    for e in outs:
        u = A.head(e)
        allowed = set(palettes[e]) if palettes is not None else None
        opts = tuple(c for c in colors if c in leaf_v and c not in centers.leaf_colors[u]
                     and (allowed is None or c in allowed))
        slots.append((u, e))
        options.append(opts)
    for _ in range(t - len(outs)):
        slots.append(None)  # dummy out-edge, never matched
        options.append(())
    return LocalBipartite(v, colors, slots, options)


def max_bipartite_matching(H: LocalBipartite) -> dict[int, int]:
    """Maximum matching as {slot index: color}; Hopcroft-Karp over the canonical (slot, color) order."""
    if not H.slots or not any(H.options):
        return {}
    index = {c: i for i, c in enumerate(H.colors)}
    rows, cols = [], []
    for i, opts in enumerate(H.options):
        for c in opts:
            rows.append(i)
            cols.append(index[c])
    mat = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(H.slots), len(H.colors)))
    match = maximum_bipartite_matching(mat, perm_type="column")
    return {i: H.colors[int(j)] for i, j in enumerate(match) if j >= 0}


def matching_size(H: LocalBipartite) -> int:
    return len(max_bipartite_matching(H))


@dataclass
class MatchingSplit:
    coloring: PartialColoring  # E0
    leftover: set[int]  # E1
    charged_to: dict[int, int]  # E1 edge -> tail; a delta-orientation witness
    max_deficit: int


def sfd_from_matchings(g: MultiGraph, A: Orientation, centers: CenterAssignment,
                       matchings: dict[int, tuple[LocalBipartite, dict[int, int]]], delta: int) -> MatchingSplit:
    """phi(vu) = c for every matched (c, u); unmatched real out-edges become the leftover.

    The deficit of v counts its unmatched real out-edges only.
    """
    coloring = PartialColoring.empty(g.m)
    leftover, charged = set(), {}
    worst = 0
    for v in range(g.n):
        H, M = matchings[v]
        deficit = 0
        for i, slot in enumerate(H.slots):
            if slot is None:
                continue
            _, e = slot
            if i in M:
                coloring[e] = M[i]
            else:
                leftover.add(e)
                charged[e] = v
                deficit += 1
        if deficit > delta:
            raise MatchingDeficitError(v, deficit, delta)
        worst = max(worst, deficit)
    return MatchingSplit(coloring, leftover, charged, worst)


def all_matchings(g, A, centers, palettes, t) -> dict[int, tuple[LocalBipartite, dict[int, int]]]:
    out = {}
    for v in range(g.n):
        H = build_hv(g, A, centers, palettes, v, t)
        out[v] = (H, max_bipartite_matching(H))
    return out


def _log_delta(g: MultiGraph) -> float:
    return math.log2(max(g.max_degree(), 2))


def sfd_precondition(a: int, eps, max_degree: int) -> bool:
    return frac(eps) * a >= C_SFD * (math.sqrt(math.log2(max(max_degree, 2))) + math.log2(max(a, 2)))


def _center_events(g: MultiGraph, A: Orientation) -> dict[int, tuple[int, ...]]:
    return {v: tuple(sorted({v} | {A.head(e) for e in A.out_edges(v)})) for v in range(g.n)}


@dataclass
class CenterSampling:
    centers: CenterAssignment
    required: int  # matching size every H_v reached
    resampled: int
    rounds: int


def sample_centers_sfd(g: MultiGraph, a: int, eps, stream=None, ledger: RoundLedger | None = None,
                       A: Orientation | None = None, test_mode: bool = False) -> CenterSampling:
    """Uniform a-subsets of [t] per vertex, resampled until every H_v has a matching of size ceil(a (1 - eps))."""
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    t = ceil_frac((1 + e) * a)
    if t <= a:
        raise PreconditionError("t = ceil((1 + eps) a) must exceed a")
    if not test_mode and not sfd_precondition(a, e, g.max_degree()):
        raise PreconditionError(f"needs a eps >= {C_SFD} (sqrt(log Delta) + log a); pass test_mode to relax")
    if A is None:
        A = low_outdegree_orientation(g, e, stream.derive("orient"), ledger).orientation
    colors = tuple(range(t))
    required = ceil_frac(a * (1 - e))

    def sample(v, rng):
        return frozenset(int(c) for c in rng.choice(t, size=a, replace=False))

    A_outdeg = A.outdegrees()
    delta = t - required

    def violated(v, assign):
        ca = CenterAssignment(assign, colors)  # the assignment dict is indexed by vertex
        return matching_size(build_hv(g, A, ca, None, v, t)) < A_outdeg[v] - delta

    res = distributed_lll(list(range(g.n)), sample, _center_events(g, A), violated, stream.derive("lll"), ledger,
                          n=g.n, radius=2, label="sfd:centers")
    centers = CenterAssignment([res.assignment[v] for v in range(g.n)], colors)
    return CenterSampling(centers, required, res.resampled, res.rounds)


def sample_centers_lsfd(g: MultiGraph, a: int, eps, palettes: PaletteSet, stream=None,
                        ledger: RoundLedger | None = None, A: Orientation | None = None, test_mode: bool = False,
                        leaf_prob: float | None = None) -> CenterSampling:
    """Each color joins C_v independently with probability 1 - eps (or ``leaf_prob``); resampled until every
    H_v matches all real out-edges."""
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    t = ceil_frac((1 + e) * a)
    if not test_mode:
        if e > LSFD_EPS_MAX:
            raise PreconditionError(f"needs eps <= {LSFD_EPS_MAX}; pass test_mode to relax")
        if e * a < C_LSFD * _log_delta(g):
            raise PreconditionError(f"needs a eps >= {C_LSFD} log Delta; pass test_mode to relax")
        palettes.require(math.ceil(a * (1 + LSFD_PALETTE_FACTOR * e)))
    else:
        palettes.require(t)
    if leaf_prob is None:
        leaf_prob = 1 - float(e)
    if A is None:
        A = low_outdegree_orientation(g, e, stream.derive("orient"), ledger).orientation
    colors = tuple(palettes.universe)
    A_outdeg = A.outdegrees()

    def sample(v, rng):
        keep = rng.random(len(colors)) < leaf_prob
        return frozenset(c for c, k in zip(colors, keep) if k)

    def violated(v, assign):
        ca = CenterAssignment(assign, colors)
        return matching_size(build_hv(g, A, ca, palettes, v, t)) < A_outdeg[v]

    res = distributed_lll(list(range(g.n)), sample, _center_events(g, A), violated, stream.derive("lll"), ledger,
                          n=g.n, radius=2, label="lsfd:centers")
    centers = CenterAssignment([res.assignment[v] for v in range(g.n)], colors)
    return CenterSampling(centers, t, res.resampled, res.rounds)


@dataclass
class StarRun:
    coloring: PartialColoring
    centers: CenterAssignment
    mode: str
    a: int
    t: int
    delta: int
    max_deficit: int
    leftover: set[int]
    leftover_pseudo_arboricity: int
    colors: int
    c_bound: float  # colors <= (1 + c_bound eps) a holds by construction of this run
    thresholds_met: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"mode": self.mode, "a": self.a, "t": self.t, "delta": self.delta, "max_deficit": self.max_deficit,
                "leftover_edges": len(self.leftover), "leftover_pseudo_arboricity": self.leftover_pseudo_arboricity,
                "colors": self.colors, "c": self.c_bound, "thresholds_met": dict(self.thresholds_met)}


def star_forest_decomposition(g: MultiGraph, eps, mode: str = "sfd", palettes: PaletteSet | None = None,
                              stream=None, ledger: RoundLedger | None = None, a: int | None = None,
                              test_mode: bool = False, leaf_prob: float | None = None) -> StarRun:
    """(1 + O(eps)) a star forests (``sfd``) or a list star-forest decomposition (``lsfd``) of a simple graph."""
    _require_simple(g)
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    if mode not in ("sfd", "lsfd"):
        raise ValueError("mode must be 'sfd' or 'lsfd'")
    if a is None:
        a = arboricity_bound(g)
    a = max(int(a), 1)
    t = ceil_frac((1 + e) * a)
    if g.m == 0:
        empty = PartialColoring.empty(0)
        return StarRun(empty, CenterAssignment([frozenset()] * g.n), mode, a, t, 0, 0, set(), 0, 0, 0.0)
    A = low_outdegree_orientation(g, e, stream.derive("orient"), ledger).orientation  # outdegree <= t
    if mode == "sfd":
        sampling = sample_centers_sfd(g, a, e, stream.derive("centers"), ledger, A, test_mode)
        delta = t - sampling.required
        matchings = all_matchings(g, A, sampling.centers, None, t)
    else:
        if palettes is None:
            raise ValueError("lsfd mode needs palettes")
        sampling = sample_centers_lsfd(g, a, e, palettes, stream.derive("centers"), ledger, A, test_mode, leaf_prob)
        delta = 0
        matchings = all_matchings(g, A, sampling.centers, palettes, t)
    ledger.charge(f"{mode}:matchings", 1)
    split = sfd_from_matchings(g, A, sampling.centers, matchings, delta)
    coloring = split.coloring
    left_a_star = 0
    if split.leftover:
        sub, emap = g.edge_subgraph(sorted(split.leftover))
        left_a_star = pseudo_arboricity(sub)[0].value
        stars = star_forest_3t(sub, Fraction(1, 100), ledger, left_a_star, offset=t)
        for i, f in enumerate(emap):
            coloring[f] = stars[i]
    colors = coloring.num_colors()
    extra = 3 * math.floor(Fraction(201, 100) * left_a_star)
    c_bound = float(frac(t + extra - a) / (a * e))
    # deficits are counted over real out-edges; padding slots never match
    met = {"a(1-eps)": split.max_deficit <= t - ceil_frac(a * (1 - e)),
           "t-2a*eps": split.max_deficit <= math.floor(2 * a * e),
           "perfect": split.max_deficit == 0}
    return StarRun(coloring, sampling.centers, mode, a, t, delta, split.max_deficit, split.leftover, left_a_star,
                   colors, c_bound, met)
