"""Forest and list-forest decompositions by cluster-local augmentation.

The main driver walks the classes of a network decomposition of G^{2(R+R')}.
For each cluster C it first runs a CUT strategy that removes edges until no
monochromatic path leads from C' = N^{R'}(C) out of C'' = N^{R+R'}(C), and then
colors every edge touching C by augmenting sequences confined to C'. Removed
edges form the leftover graph, which is decomposed separately with fresh
colors (plain forests) or with a disjoint part of every vertex's color space
(lists).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .augmentation import ColorForests, color_edge_set, default_radius_cap
from .basic import (C_LEN, acyclic_orientation, greedy_lfd, lsfd_4eps, reduce_forest_diameter, shorten_to_inv_eps,
                    star_forest_3t)
from .graph import MultiGraph, ball
from .lll import distributed_lll
from .netdecomp import C_CLASSES, network_decomposition, stochastic_decomposition
from .oracles import arboricity_bound, pseudo_arboricity
from .runtime import RoundLedger, as_stream
from .structures import Orientation, PaletteError, PaletteSet, PartialColoring
from .util import PreconditionError, ceil_frac, check_eps, frac, log2n
from .verify import ValidityReport, check_forest_decomposition

K_RADIUS = 4  # K
K_PRIME = 4  # K', R' = ceil(K' log n / eps)
K_DPRIME = 4  # K'', p = K'' a log n / (eta R)
C_PRE = 1  # eps a >= C_PRE log n counts as "eps a = Omega(log n)"
DEPTH_FACTOR = 80  # R = ceil(80 T / eps) for the random-depth cut
MAX_RETRIES = 5
STRATEGIES = ("diameter", "random_depth", "random_outedge")


class NotGoodError(RuntimeError):
    """Every retry left a monochromatic path out of some cluster's (R+R')-ball."""


class SplitGuaranteeError(RuntimeError):
    pass


@dataclass
class AlgorithmParams:
    eps: Fraction
    a_bound: int
    a_star_bound: int
    R: int
    R_prime: int
    strategy: str
    T: int
    eta: Fraction = Fraction(1, 2)
    p: float = 1.0
    N: int = 1  # random-depth period
    eps_cut: Fraction = Fraction(0)  # per-cluster eps of the diameter cut
    c_len: int = C_LEN
    calibration: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"eps": str(self.eps), "a_bound": self.a_bound, "a_star_bound": self.a_star_bound, "R": self.R,
                "R_prime": self.R_prime, "strategy": self.strategy, "T": self.T, "eta": str(self.eta),
                "p": self.p, "N": self.N, "calibration": dict(self.calibration)}


def select_strategy(eps, a: int, n: int, max_degree: int, plain: bool) -> str:
    """Pick a CUT strategy from the parameter regime (log base 2 throughout)."""
    ea = frac(eps) * a
    if ea >= C_PRE * log2n(n):
        return "random_depth" if plain else "diameter"
    return "random_outedge"


def make_params(g: MultiGraph, eps, a_bound: int, a_star_bound: int | None = None, strategy: str | None = None,
                plain: bool = True, overrides: dict | None = None, check_pre: bool = True) -> AlgorithmParams:
    e = check_eps(eps)
    overrides = dict(overrides or {})
    K = overrides.pop("K", K_RADIUS)
    Kp = overrides.pop("K_prime", K_PRIME)
    Kpp = overrides.pop("K_dprime", K_DPRIME)
    c_len = overrides.pop("c_len", C_LEN)
    n = max(g.n, 2)
    logn = log2n(n)
    delta = max(g.max_degree(), 2)
    log_delta = math.log2(delta)
    a = max(int(a_bound), 1)
    if a_star_bound is None:
        a_star_bound = a
    if strategy is None:
        strategy = select_strategy(e, a, n, delta, plain)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown CUT strategy {strategy!r}; choose from {STRATEGIES}")
    if check_pre and strategy in ("diameter", "random_depth") and e * a < C_PRE * logn:
        raise PreconditionError(f"the {strategy} cut needs eps * a >= {C_PRE} * log n")
    T = C_CLASSES * logn
    R_prime = math.ceil(Kp * logn / e)
    params = AlgorithmParams(e, a, int(a_star_bound), 0, R_prime, strategy, T, c_len=c_len,
                             calibration={"K": K, "K_prime": Kp, "K_dprime": Kpp, "C_PRE": C_PRE})
    if strategy == "diameter":
        params.eps_cut = e / (2 * T)
        threshold = math.ceil(c_len * logn / params.eps_cut)
        params.R = 2 * threshold + 1
    elif strategy == "random_depth":
        params.R = math.ceil(DEPTH_FACTOR * T / e)
        params.N = max(1, params.R // 2)
    else:
        t = ceil_frac(e * a)
        if e * a <= log_delta:
            params.eta = min(Fraction(1, 2), frac(t) / frac(2 * log_delta))
            params.R = math.ceil(K * delta ** ((2 + 4 * float(params.eta)) / t) * log_delta * logn ** 2
                                 / (a * float(e) ** 2))
        else:
            params.eta = Fraction(1, 2)
            params.R = math.ceil(K * logn ** 2 / e)
        params.p = min(1.0, Kpp * a * logn / (float(params.eta) * params.R))
    for key, value in overrides.items():
        if not hasattr(params, key):
            raise ValueError(f"unknown parameter override {key!r}")
        setattr(params, key, value)
    params.p = float(params.p)  # CLI overrides arrive as fractions
    if params.strategy == "random_depth" and "N" not in overrides:
        params.N = max(1, params.R // 2)
    return params


@dataclass
class CutState:
    """Removed edges, the vertex each one is charged to, and per-vertex loads."""

    load: list[int]
    removed: dict[int, int] = field(default_factory=dict)
    J: Orientation | None = None

    @classmethod
    def initialize(cls, g: MultiGraph, params: AlgorithmParams, ledger: RoundLedger | None = None) -> "CutState":
        J = None
        if params.strategy == "random_outedge" and g.m:
            J = acyclic_orientation(g, Fraction(1, 2), ledger, params.a_star_bound)  # floor(2.5 a*) <= 3a
        return cls([0] * g.n, {}, J)

    def charge(self, e: int, v: int) -> None:
        self.removed[e] = v
        self.load[v] += 1


@dataclass
class CutScope:
    g: MultiGraph
    coloring: PartialColoring
    cluster: list[int]
    inner: set[int]  # N^{R'}(C)
    outer: set[int]  # N^{R+R'}(C)

    def annulus_edges(self) -> dict[int, list[int]]:
        """Colored edges touching the outer ball that are not inside the inner ball, by color."""
        out: dict[int, list[int]] = {}
        seen = set()
        for x in sorted(self.outer - self.inner):
            for e in self.g.incident(x):
                if e in seen:
                    continue
                seen.add(e)
                c = self.coloring[e]
                if c is not None:
                    out.setdefault(c, []).append(e)
        for c in out:
            out[c].sort()
        return out


def cut_diameter(scope: CutScope, params: AlgorithmParams, stream, state: CutState) -> set[int]:
    """Diameter reduction with eps / (2T) on the annulus forests; removed edges go to the leftover."""
    by_color = scope.annulus_edges()
    edges = sorted(e for es in by_color.values() for e in es)
    if not edges:
        return set()
    sub, emap = scope.g.edge_subgraph(edges)
    sub_col = PartialColoring([scope.coloring[e] for e in emap])
    red = reduce_forest_diameter(sub, sub_col, params.eps_cut, stream, None, params.a_bound, params.c_len)
    removed = set()
    for i in sorted(red.e1_prime | red.e1_double):
        e = emap[i]
        removed.add(e)
        state.charge(e, red.tail_of[i])  # edge_subgraph keeps vertex ids
    return removed


def _rooted_annulus_trees(scope: CutScope, edges: list[int]):
    """Root every tree of one annulus color class that meets the inner ball; yields (child, edge, depth)."""
    g = scope.g
    adj: dict[int, list[int]] = {}
    for e in edges:
        u, v = g.edges[e]
        adj.setdefault(u, []).append(e)
        adj.setdefault(v, []).append(e)
    depth: dict[int, int] = {}
    out = []
    for root in sorted(x for x in adj if x in scope.inner):
        if root in depth:
            continue
        depth[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for e in adj[x]:
                    y = g.other(e, x)
                    if y in depth:
                        continue
                    depth[y] = depth[x] + 1
                    out.append((y, e, depth[y]))
                    nxt.append(y)
            frontier = nxt
    return out


def cut_random_depth(scope: CutScope, params: AlgorithmParams, stream, state: CutState) -> set[int]:
    """Per color draw J in 1..N and delete parent edges whose child depth is J mod N."""
    removed = set()
    N = params.N
    for c, edges in sorted(scope.annulus_edges().items()):
        rng = stream.derive("depth", c).generator()
        J = int(rng.integers(1, N + 1))
        for child, e, d in _rooted_annulus_trees(scope, edges):
            if d % N == J % N:
                removed.add(e)
                state.charge(e, child)  # oriented away from the child
    return removed


def cut_random_outedge(scope: CutScope, params: AlgorithmParams, stream, state: CutState) -> set[int]:
    """Each underloaded vertex of C'' removes, with probability p, one random out-edge of J."""
    if state.J is None:
        raise PreconditionError("random_outedge needs CutState initialized with a 3a-orientation")
    limit = params.eps * params.a_bound
    rng = stream.derive("outedge").generator()
    removed = set()
    for v in sorted(scope.outer):
        coin = rng.random()
        if state.load[v] >= limit:
            continue
        if coin >= params.p:
            continue
        outs = [e for e in state.J.out_edges(v) if e not in state.removed]
        if not outs:
            continue
        e = outs[int(rng.integers(0, len(outs)))]
        removed.add(e)
        state.charge(e, v)
    return removed


CUTS: dict[str, Callable] = {
    "diameter": cut_diameter,
    "random_depth": cut_random_depth,
    "random_outedge": cut_random_outedge,
}


def is_good(g: MultiGraph, coloring: PartialColoring, inner: set[int], outer: set[int]) -> bool:
    """True iff no monochromatic path leaves ``outer`` from ``inner``."""
    by_color: dict[int, dict[int, list[int]]] = {}
    seen = set()
    for x in outer:
        for e in g.incident(x):
            c = coloring[e]
            if c is None or e in seen:
                continue
            seen.add(e)
            u, v = g.edges[e]
            adj = by_color.setdefault(c, {})
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    for adj in by_color.values():
        stack = [x for x in adj if x in inner]
        reached = set(stack)
        while stack:
            x = stack.pop()
            if x not in outer:
                return False
            for y in adj.get(x, ()):
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
    return True


@dataclass
class MainRun:
    coloring: PartialColoring
    leftover: set[int]
    good: bool
    params: AlgorithmParams
    state: CutState
    clusters: int = 0
    classes: int = 0
    retries: int = 0
    bad_clusters: list[int] = field(default_factory=list)

    @property
    def max_load(self) -> int:
        return max(self.state.load, default=0)

    def to_json(self, ledger: RoundLedger | None = None) -> dict:
        return {"colors": self.coloring.num_colors(), "leftover_edges": len(self.leftover), "good": self.good,
                "retries": self.retries, "rounds": ledger.to_json() if ledger is not None else None,
                "strategy": self.params.strategy}


def forest_decomposition_main(g: MultiGraph, palettes: PaletteSet, params: AlgorithmParams, cut_strategy=None,
                              stream=None, ledger: RoundLedger | None = None) -> MainRun:
    """One pass of the cluster-by-cluster driver; ``good`` is checked by BFS after every CUT."""
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    cut = cut_strategy if callable(cut_strategy) else CUTS[cut_strategy or params.strategy]
    palettes.require(math.ceil((1 + params.eps) * params.a_bound))
    coloring = PartialColoring.empty(g.m)
    state = CutState.initialize(g, params, ledger)
    if g.m == 0:
        return MainRun(coloring, set(), True, params, state)
    F = ColorForests(g, coloring)
    D = params.R + params.R_prime
    nd = network_decomposition(g, stream.derive("nd"), ledger, r=2 * D)
    clusters = nd.clusters()
    cap = min(params.R_prime, default_radius_cap(g.n, params.eps))
    good = True
    bad = []
    for z, cids in enumerate(nd.clusters_by_class()):
        cost = 0
        for cid in cids:
            C = clusters[cid]
            inner = ball(g, C, params.R_prime)
            outer = ball(g, C, D)
            scope = CutScope(g, coloring, C, inner, outer)
            for e in sorted(cut(scope, params, stream.derive("cut", cid), state)):
                F.set_color(e, None)
            if params.strategy == "random_outedge" and cut is cut_random_outedge:
                assert max(state.load) <= ceil_frac(params.eps * params.a_bound), "load guard breached"
            if not is_good(g, coloring, inner, outer):
                good = False
                bad.append(cid)
            todo = {e for v in C for e in g.incident(v) if coloring[e] is None and e not in state.removed}
            color_edge_set(g, coloring, palettes, todo, eps=params.eps, radius_cap=cap, forests=F)
            # a leader gathers N^{R+R'}(C), runs CUT and the augmentations, and writes back
            cost = max(cost, 2 * (nd.weak_radius[cid] + D))
        ledger.charge(f"fd:class{z}", cost)
    return MainRun(coloring, set(state.removed), good, params, state, len(clusters), nd.chi, 0, bad)


def run_until_good(g: MultiGraph, palettes: PaletteSet, params: AlgorithmParams, cut_strategy=None, stream=None,
                   ledger: RoundLedger | None = None, max_retries: int = MAX_RETRIES, log: list | None = None) -> MainRun:
    """Repeat the main pass with derived fresh streams until it is good."""
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    for attempt in range(max_retries + 1):
        run = forest_decomposition_main(g, palettes, params, cut_strategy, stream.derive("main", attempt), ledger)
        run.retries = attempt
        if run.good:
            return run
        if log is not None:
            log.append(f"attempt {attempt}: clusters {run.bad_clusters} not good, retrying")
    raise NotGoodError(f"main pass not good after {max_retries} retries")


def default_a_bound(g: MultiGraph) -> int:
    return arboricity_bound(g)


def _leftover_subgraph(g: MultiGraph, leftover) -> tuple[MultiGraph, list[int]]:
    return g.edge_subgraph(sorted(leftover))


@dataclass
class FDResult:
    coloring: PartialColoring
    colors: int
    a_bound: int
    main: MainRun
    leftover_pseudo_arboricity: int
    leftover_budget: int
    strategy: str
    diameter_mode: str | None = None
    report: ValidityReport | None = None
    log: list = field(default_factory=list)

    def to_json(self, ledger: RoundLedger | None = None) -> dict:
        out = self.main.to_json(ledger)
        out["colors"] = self.colors
        return out


def combine_fd(g: MultiGraph, eps, stream=None, ledger: RoundLedger | None = None, a_bound: int | None = None,
               strategy: str | None = None, diameter: str | None = None, overrides: dict | None = None,
               check_pre: bool = True, max_retries: int = MAX_RETRIES) -> FDResult:
    """ceil((1 + eps) a)-forest decomposition: main pass with eps/10, leftover recolored with fresh colors.

    ``diameter`` may be "log" (diameter O(log n / eps), eps/10 more colors) or
    "inverse" (diameter O(1 / eps) when a is large enough).
    """
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    a = int(a_bound) if a_bound is not None else default_a_bound(g)
    if g.m and e * a < 3:
        raise PreconditionError("combine_fd needs eps * a >= 3")
    e_main = e / 10
    base = math.ceil((1 + e_main) * a)
    palettes = PaletteSet.uniform(g.m, base)
    a_star = pseudo_arboricity(g)[0].value if g.m else 0
    params = make_params(g, e_main, a, a_star, strategy, True, overrides, check_pre)
    log: list = []
    main = run_until_good(g, palettes, params, None, stream.derive("fd"), ledger, max_retries, log)
    coloring = main.coloring.copy()
    k_left = ceil_frac(e_main * a)
    left_a_star = 0
    if main.leftover:
        sub, emap = _leftover_subgraph(g, main.leftover)
        left_a_star = pseudo_arboricity(sub)[0].value
        size = math.floor(Fraction(201, 100) * max(k_left, left_a_star))
        if left_a_star > k_left:
            log.append(f"leftover pseudo-arboricity {left_a_star} exceeds {k_left}")
        left = greedy_lfd(sub, Fraction(1, 100), PaletteSet.uniform(sub.m, size, start=base), ledger, left_a_star)
        for i, f in enumerate(emap):
            coloring[f] = left[i]
    if diameter is not None:
        coloring = _reduce_diameter(g, coloring, e, a, diameter, stream.derive("diameter"), ledger)
    report = check_forest_decomposition(g, coloring)
    return FDResult(coloring, coloring.num_colors(), a, main, left_a_star, k_left, params.strategy, diameter,
                    report, log)


def _reduce_diameter(g, coloring, e, a, mode, stream, ledger) -> PartialColoring:
    used = coloring.num_colors()
    top = max(coloring.used_colors(), default=-1) + 1
    if mode == "log":
        red = reduce_forest_diameter(g, coloring, e / 10, stream, ledger, a)
        out = red.coloring0.copy()
        for f in range(g.m):
            if red.coloring1[f] is not None:
                out[f] = top + red.coloring1[f]
        return out
    if mode == "inverse":
        rho = frac(max(used, 1)) / max(a, 1)
        sh = shorten_to_inv_eps(g, coloring, rho, e / 100, stream, ledger, a, check_pre=False)
        out = sh.coloring0.copy()
        if sh.decolored:
            sub, emap = g.edge_subgraph(sorted(sh.decolored))
            stars = star_forest_3t(sub, Fraction(1, 100), ledger, offset=top)
            for i, f in enumerate(emap):
                out[f] = stars[i]
        return out
    raise ValueError(f"unknown diameter mode {mode!r}; use 'log' or 'inverse'")


# ---------------------------------------------------------------- list version


@dataclass
class VertexColorSplit:
    """ones[v] holds the colors placed in the second part of v's color space."""

    ones: list[set[int]]
    mode: str = "stochastic"
    attempts: int = 1

    def side(self, v: int, c: int) -> int:
        return 1 if c in self.ones[v] else 0

    def induced(self, g: MultiGraph, palettes: PaletteSet, e: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        u, v = g.edges[e]
        q0 = tuple(c for c in palettes[e] if c not in self.ones[u] and c not in self.ones[v])
        q1 = tuple(c for c in palettes[e] if c in self.ones[u] and c in self.ones[v])
        return q0, q1

    def palettes(self, g: MultiGraph, palettes: PaletteSet) -> tuple[PaletteSet, PaletteSet]:
        q0, q1 = [], []
        for e in range(g.m):
            a, b = self.induced(g, palettes, e)
            q0.append(a)
            q1.append(b)
        return PaletteSet(q0, palettes.universe), PaletteSet(q1, palettes.universe)

    def to_json(self) -> dict:
        return {"mode": self.mode, "ones": [sorted(s) for s in self.ones]}


def _universe(palettes: PaletteSet) -> list[int]:
    if palettes.universe is not None:
        return sorted(palettes.universe)
    return sorted({c for e in range(len(palettes)) for c in palettes[e]})


def split_bounds(mode: str, eps: Fraction, a: int) -> tuple[Fraction, Fraction]:
    low0 = (1 + eps / 2) * a
    low1 = eps * a / 20 if mode == "stochastic" else eps * eps * a / 200
    return low0, low1


def split_shortfalls(g: MultiGraph, palettes: PaletteSet, split: VertexColorSplit, eps, a: int) -> list[int]:
    low0, low1 = split_bounds(split.mode, frac(eps), a)
    bad = []
    for e in range(g.m):
        q0, q1 = split.induced(g, palettes, e)
        if len(q0) < low0 or len(q1) < low1:
            bad.append(e)
    return bad


def vertex_color_split(g: MultiGraph, palettes: PaletteSet, eps, mode: str = "stochastic", stream=None,
                       ledger: RoundLedger | None = None, a: int | None = None, max_retries: int = MAX_RETRIES,
                       log: list | None = None) -> VertexColorSplit:
    """Split every vertex's color space in two so both induced palettes stay large."""
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    if a is None:
        a = default_a_bound(g)
    palettes.require(math.ceil((1 + e) * a))
    universe = _universe(palettes)
    q = float(e) / 10
    if mode == "stochastic":
        for attempt in range(max_retries + 1):
            s = stream.derive("split", attempt)
            ones: list[set[int]] = [set() for _ in range(g.n)]
            rounds = 0
            for c in universe:
                sd = stochastic_decomposition(g, float(q), s.derive("sd", c), None)
                rounds = max(rounds, sd.D + 1)
                rng = s.derive("bits", c).generator()
                bits = rng.random(max(sd.component_of, default=-1) + 1) < q
                for v in range(g.n):
                    if bits[sd.component_of[v]]:
                        ones[v].add(c)
            ledger.charge("split:stochastic", rounds)
            split = VertexColorSplit(ones, mode, attempt + 1)
            short = split_shortfalls(g, palettes, split, e, a)
            if not short:
                return split
            if log is not None:
                log.append(f"split attempt {attempt}: {len(short)} edges below the palette bounds")
        raise SplitGuaranteeError(f"vertex-color split missed its bounds after {max_retries} retries")
    if mode != "independent":
        raise ValueError(f"unknown split mode {mode!r}")
    variables = [(v, c) for v in range(g.n) for c in universe]
    colors_at = [set() for _ in range(g.n)]
    for f in range(g.m):
        for x in g.edges[f]:
            colors_at[x].update(palettes[f])
    variables = [(v, c) for v in range(g.n) for c in sorted(colors_at[v])]
    events = {f: tuple((x, c) for x in sorted(set(g.edges[f])) for c in palettes[f]) for f in range(g.m)}
    low0, low1 = split_bounds(mode, e, a)

    def sample(var, rng):
        return bool(rng.random() < q)

    def violated(f, assign):
        u, v = g.edges[f]
        n0 = sum(1 for c in palettes[f] if not assign[(u, c)] and not assign[(v, c)])
        n1 = sum(1 for c in palettes[f] if assign[(u, c)] and assign[(v, c)])
        return n0 < low0 or n1 < low1

    res = distributed_lll(variables, sample, events, violated, stream.derive("lll"), ledger, n=g.n, radius=1,
                          label="split:lll")
    ones = [set() for _ in range(g.n)]
    for (v, c), bit in res.assignment.items():
        if bit:
            ones[v].add(c)
    return VertexColorSplit(ones, mode, res.rounds + 1)


def cross_component_violations(g: MultiGraph, coloring: PartialColoring, part_of: list[int]) -> list[tuple[int, int]]:
    """(color, vertex) pairs where one color class mixes edges of both parts at a vertex."""
    seen: dict[tuple[int, int], int] = {}
    bad = []
    for f in range(g.m):
        c = coloring[f]
        if c is None:
            continue
        for x in set(g.edges[f]):
            key = (c, x)
            if key in seen and seen[key] != part_of[f]:
                bad.append(key)
            seen.setdefault(key, part_of[f])
    return bad


@dataclass
class LFDResult:
    coloring: PartialColoring
    split: VertexColorSplit
    main: MainRun
    decolored_main: set[int]
    second_part: set[int]
    report: ValidityReport
    stages: dict = field(default_factory=dict)
    log: list = field(default_factory=list)


def combine_lfd(g: MultiGraph, palettes: PaletteSet, eps, stream=None, ledger: RoundLedger | None = None,
                mode: int = 1, a: int | None = None, strategy: str | None = None, overrides: dict | None = None,
                check_pre: bool = True, max_retries: int = MAX_RETRIES) -> LFDResult:
    """List-forest decomposition from palettes of size ceil((1 + eps) a).

    Mode 1 splits stochastically and runs the main pass with eps/1000; mode 2
    splits independently with resampling and uses eps^2/1000. The main pass
    and its diameter reduction use the first induced palettes, the star-forest
    pass on the uncolored rest uses the second.
    """
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    if a is None:
        a = default_a_bound(g)
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    n = max(g.n, 2)
    if check_pre:
        if mode == 1 and e * a < C_PRE * log2n(n):
            raise PreconditionError("mode 1 needs eps * a >= log n")
        if mode == 2 and e * e * a < C_PRE * math.log2(max(g.max_degree(), 2)):
            raise PreconditionError("mode 2 needs eps^2 * a >= log Delta")
    log: list = []
    stages: dict = {}
    split = vertex_color_split(g, palettes, e, "stochastic" if mode == 1 else "independent",
                               stream.derive("split"), ledger, a, max_retries, log)
    q0, q1 = split.palettes(g, palettes)
    e_small = e / 1000 if mode == 1 else e * e / 1000
    a_star = pseudo_arboricity(g)[0].value if g.m else 0
    params = make_params(g, e_small, a, a_star, strategy, False, overrides, check_pre=False)
    main = run_until_good(g, q0, params, None, stream.derive("main"), ledger, max_retries, log)
    stages["main"] = {"strategy": params.strategy, "leftover": len(main.leftover), "retries": main.retries}
    red = reduce_forest_diameter(g, main.coloring, e_small, stream.derive("diameter"), ledger, a)
    phi0 = red.coloring0
    decolored = {f for f in range(g.m) if main.coloring[f] is not None and phi0[f] is None}
    rest = sorted(main.leftover | decolored)
    stages["diameter"] = {"decolored": len(decolored), "threshold": red.threshold}
    coloring = phi0.copy()
    if rest:
        sub, emap = g.edge_subgraph(rest)
        sub_q1 = q1.restrict(emap)
        rest_a_star = pseudo_arboricity(sub)[0].value
        stages["second"] = {"edges": len(rest), "pseudo_arboricity": rest_a_star,
                            "min_palette": sub_q1.min_size()}
        try:
            phi1 = lsfd_4eps(sub, min(e, Fraction(1)), sub_q1, ledger, stream.derive("lsfd"), rest_a_star)
        except PaletteError as err:
            raise PaletteError(emap[err.edge], err.size, err.needed) from err  # report the original edge id
        for i, f in enumerate(emap):
            coloring[f] = phi1[i]
    rest_set = set(rest)
    part_of = [1 if f in rest_set else 0 for f in range(g.m)]
    report = check_forest_decomposition(g, coloring, palettes)
    mixed = cross_component_violations(g, coloring, part_of)
    for c, x in mixed:
        report.add(("color", c), f"vertex {x} joins edges of both parts")
    report.metrics["cross_part_conflicts"] = len(mixed)
    return LFDResult(coloring, split, main, decolored, set(rest), report, stages, log)
