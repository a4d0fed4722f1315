"""Building blocks: H-partitions, acyclic orientations, simple (list) forest and
star-forest decompositions, diameter reduction, and the pseudo-tree split.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .graph import MultiGraph, connected_components
from .lll import distributed_lll
from .netdecomp import network_decomposition
from .oracles import arboricity_bound, degeneracy, degeneracy_orientation, pseudo_arboricity
from .runtime import RoundLedger, as_stream
from .structures import Orientation, PaletteError, PaletteSet, PartialColoring
from .util import PreconditionError, check_eps, floor_frac, frac, log2n, ceil_frac

# Both calibrated on long monochromatic path inputs.
C_LEN = 12
C_DIAM = 24


@dataclass
class HPartition:
    class_of: list[int]  # 1-based class index per vertex
    k: int
    t: int


def _a_star(g: MultiGraph, a_star: int | None) -> int:
    return pseudo_arboricity(g)[0].value if a_star is None else a_star


def h_partition(g: MultiGraph, eps, ledger: RoundLedger | None = None, a_star: int | None = None) -> HPartition:
    """Peel all vertices of remaining degree <= t = floor((2 + eps) a*) per round.

    eps = 0 is accepted: peeling still terminates because the remaining graph
    always has average degree at most 2a*.
    """
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps, upper=1, allow_zero=True)
    a_star = _a_star(g, a_star)
    t = floor_frac((2 + e) * a_star)
    deg = [g.degree(v) for v in range(g.n)]
    class_of = [0] * g.n
    alive = set(range(g.n))
    k = 0
    while alive:
        k += 1
        peel = [v for v in sorted(alive) if deg[v] <= t]
        if not peel:
            raise RuntimeError("peeling stalled; the supplied a* bound is too small")
        for v in peel:
            class_of[v] = k
        alive.difference_update(peel)
        for v in peel:
            for ed in g.incident(v):
                u = g.other(ed, v)
                if u in alive:
                    deg[u] -= 1
    if k:
        ledger.charge("h-partition", 1, k)
    return HPartition(class_of, k, t)


def orientation_from_partition(g: MultiGraph, hp: HPartition) -> Orientation:
    """Lower class toward higher class; inside a class, lower index toward higher index."""
    return Orientation(g, [(hp.class_of[u], u) < (hp.class_of[v], v) for u, v in g.edges])


def acyclic_orientation(g: MultiGraph, eps, ledger: RoundLedger | None = None,
                        a_star: int | None = None) -> Orientation:
    return orientation_from_partition(g, h_partition(g, eps, ledger, a_star))


def forest_labels(g: MultiGraph, orient: Orientation) -> list[int]:
    """Number each vertex's out-edges 0, 1, ... in edge-id order."""
    label = [0] * g.m
    for v in range(g.n):
        for i, e in enumerate(orient.out_edges(v)):
            label[e] = i
    return label


def cole_vishkin_3coloring(parent: list[int]) -> tuple[list[int], int]:
    """Proper 3-coloring of a rooted forest given by parent pointers (-1 = root).

    Returns the colors and the number of synchronous rounds used.
    """
    n = len(parent)
    color = list(range(n))
    rounds = 0
    while color and max(color) >= 6:
        new = [0] * n
        for v in range(n):
            p = parent[v]
            if p < 0:
                i = 0
            else:
                diff = color[v] ^ color[p]
                i = (diff & -diff).bit_length() - 1
            new[v] = 2 * i + ((color[v] >> i) & 1)
        color = new
        rounds += 1
    children: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p >= 0:
            children[p].append(v)
    for x in (5, 4, 3):
        # shift down: children then share a color, so a vertex sees at most two colors around it
        shifted = [color[parent[v]] if parent[v] >= 0 else (1 if color[v] == 0 else 0) for v in range(n)]
        color = shifted
        for v in range(n):
            if color[v] == x:
                near = {color[u] for u in children[v]}
                if parent[v] >= 0:
                    near.add(color[parent[v]])
                color[v] = min({0, 1, 2} - near)
        rounds += 2
    return color, rounds


def star_forest_3t(g: MultiGraph, eps, ledger: RoundLedger | None = None, a_star: int | None = None,
                   offset: int = 0) -> PartialColoring:
    """Split the acyclic t-orientation into t rooted forests, 3-color each, and
    give edge (child -> parent) the color 3 * forest + color(parent)."""
    ledger = ledger if ledger is not None else RoundLedger()
    hp = h_partition(g, eps, ledger, a_star)
    orient = orientation_from_partition(g, hp)
    label = forest_labels(g, orient)
    colors: list[int | None] = [None] * g.m
    t_used = max(label, default=-1) + 1
    cv_rounds = 0
    for j in range(t_used):
        parent = [-1] * g.n
        for e in range(g.m):
            if label[e] == j:
                parent[orient.tail(e)] = orient.head(e)
        vcolor, rounds = cole_vishkin_3coloring(parent)
        cv_rounds = max(cv_rounds, rounds)
        for e in range(g.m):
            if label[e] == j:
                colors[e] = offset + 3 * j + vcolor[orient.head(e)]
    if cv_rounds:
        ledger.charge("3t-sfd:cole-vishkin", 1, cv_rounds)
    return PartialColoring(colors)


def greedy_lfd(g: MultiGraph, eps, palettes: PaletteSet, ledger: RoundLedger | None = None,
               a_star: int | None = None) -> PartialColoring:
    """Each vertex gives its out-edges pairwise distinct colors from their palettes."""
    ledger = ledger if ledger is not None else RoundLedger()
    orient = acyclic_orientation(g, eps, ledger, a_star)
    colors: list[int | None] = [None] * g.m
    for v in range(g.n):
        taken = set()
        for e in orient.out_edges(v):
            free = [c for c in palettes[e] if c not in taken]
            if not free:
                raise PaletteError(e, len(palettes[e]), len(taken) + 1)
            colors[e] = free[0]
            taken.add(free[0])
    if g.m:
        ledger.charge("greedy-lfd", 1)
    return PartialColoring(colors)


def degeneracy_lsfd(g: MultiGraph, palettes: PaletteSet, ledger: RoundLedger | None = None) -> PartialColoring:
    """Color out-edges vertex by vertex in reverse elimination order, avoiding the
    colors on out-edges of both endpoints."""
    ledger = ledger if ledger is not None else RoundLedger()
    _, order = degeneracy(g)
    orient = degeneracy_orientation(g, order)
    colors: list[int | None] = [None] * g.m
    for v in reversed(order):
        for e in orient.out_edges(v):
            u = orient.head(e)
            blocked = {colors[f] for f in orient.out_edges(v) if colors[f] is not None}
            blocked |= {colors[f] for f in orient.out_edges(u)}
            free = [c for c in palettes[e] if c not in blocked]
            if not free:
                raise PaletteError(e, len(palettes[e]), len(blocked) + 1)
            colors[e] = free[0]
    if g.m:
        ledger.charge("degeneracy-lsfd", 1, len(order))
    return PartialColoring(colors)


def lsfd_4eps(g: MultiGraph, eps, palettes: PaletteSet, ledger: RoundLedger | None = None, stream=None,
              a_star: int | None = None) -> PartialColoring:
    """List star-forest decomposition with palettes of floor((4 + eps) a*) colors.

    Classes of an H-partition (with eps/10) are processed from the top down. In
    class j the edges leaving H_j are list-colored greedily so that edges sharing
    an H_j endpoint differ and no edge reuses a color already on an out-edge of
    either endpoint. The greedy pass is scheduled by a network decomposition of G^3.
    """
    ledger = ledger if ledger is not None else RoundLedger()
    stream = as_stream(stream)
    e_frac = check_eps(eps, upper=1, allow_zero=True)
    colors: list[int | None] = [None] * g.m
    if g.m == 0:
        return PartialColoring(colors)
    a_star = _a_star(g, a_star)
    palettes.require(floor_frac((4 + e_frac) * a_star))
    hp = h_partition(g, e_frac / 10, ledger, a_star)
    orient = orientation_from_partition(g, hp)
    nd = network_decomposition(g, stream.derive("nd"), ledger, r=3)
    by_level: dict[int, list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        by_level.setdefault(min(hp.class_of[u], hp.class_of[v]), []).append(e)
    per_class_cost = 3 * (max(nd.weak_radius, default=0) + 1)
    for j in sorted(by_level, reverse=True):
        edges = by_level[j]

        def owner(e):
            u, v = g.edges[e]
            return u if hp.class_of[u] == j and (hp.class_of[v] != j or u < v) else v

        edges.sort(key=lambda e: (nd.class_of[owner(e)], nd.cluster_of[owner(e)], e))
        for e in edges:
            u, v = g.edges[e]
            blocked = set()
            for x in (u, v):
                if hp.class_of[x] == j:
                    blocked |= {colors[f] for f in g.incident(x)
                                if colors[f] is not None and min(hp.class_of[y] for y in g.edges[f]) == j}
                else:
                    blocked |= {colors[f] for f in orient.out_edges(x) if colors[f] is not None}
            free = [c for c in palettes[e] if c not in blocked]
            if not free:
                raise PaletteError(e, len(palettes[e]), len(blocked) + 1)
            colors[e] = free[0]
        ledger.charge(f"lsfd:class{j}", per_class_cost, nd.chi)
    return PartialColoring(colors)


# ---------------------------------------------------------------- diameter reduction


@dataclass
class DiameterReduction:
    coloring0: PartialColoring  # input colors restricted to E0
    coloring1: PartialColoring  # new colors on E1 = E1' + E1''
    e1_prime: set[int]
    e1_double: set[int]
    k_prime: int
    threshold: int
    tail_of: dict[int, int] = field(default_factory=dict)  # E1 edge -> vertex it is charged to


def _longest_directed(g: MultiGraph, orient: Orientation, edges_by_color: dict[int, list[int]]) -> dict:
    """For each color, the length of the longest directed path starting at each vertex."""
    out = {}
    topo = _topological_order(orient)
    for c, edges in edges_by_color.items():
        succ: dict[int, list[int]] = {}
        for e in edges:
            succ.setdefault(orient.tail(e), []).append(orient.head(e))
        best: dict[int, int] = {}
        for v in reversed(topo):
            if v in succ:
                best[v] = 1 + max(best.get(h, 0) for h in succ[v])
        out[c] = best
    return out


def _topological_order(orient: Orientation) -> list[int]:
    g = orient.graph
    indeg = [0] * g.n
    for e in range(g.m):
        indeg[orient.head(e)] += 1
    queue = deque(v for v in range(g.n) if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for e in orient.out_edges(v):
            h = orient.head(e)
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    return order


def reduce_forest_diameter(g: MultiGraph, coloring: PartialColoring, eps, stream=None,
                           ledger: RoundLedger | None = None, a: int | None = None,
                           c_len: int = C_LEN) -> DiameterReduction:
    """Randomly peel off out-edges into a few new forests, then move every
    color class around long directed monochromatic paths into a star-decomposed
    remainder. Only edges colored in ``coloring`` take part.
    """
    ledger = ledger if ledger is not None else RoundLedger()
    stream = as_stream(stream)
    e_frac = check_eps(eps)
    colored = [e for e in range(g.m) if coloring[e] is not None]
    empty = PartialColoring.empty(g.m)
    if not colored:
        return DiameterReduction(coloring.copy(), empty, set(), set(), 0, 0)
    sub, emap = g.edge_subgraph(colored)
    if a is None:
        a = arboricity_bound(sub)
    a = max(a, 1)
    k_prime = ceil_frac(e_frac * a / 20)
    threshold = math.ceil(c_len * log2n(g.n) / e_frac)
    orient = acyclic_orientation(sub, frac(1) / 2, ledger)  # floor(2.5 a*) <= 3a
    rng = stream.derive("coins").generator()
    coins = rng.random(sub.n) < 0.5
    picks = stream.derive("picks").generator()
    phi1 = {}
    for v in range(sub.n):
        if not coins[v]:
            continue
        outs = orient.out_edges(v)
        chosen = picks.permutation(len(outs))[:k_prime] if outs else []
        for j, idx in enumerate(chosen):
            phi1[outs[int(idx)]] = j
    e0 = {i for i in range(sub.m) if i not in phi1}
    by_color0: dict[int, list[int]] = {}
    for i in sorted(e0):
        by_color0.setdefault(coloring[emap[i]], []).append(i)
    by_color1: dict[int, list[int]] = {}
    for i in sorted(phi1):
        by_color1.setdefault(phi1[i], []).append(i)
    long0 = _longest_directed(sub, orient, by_color0)
    long1 = _longest_directed(sub, orient, by_color1)
    moved = set()
    for groups, longest in ((by_color0, long0), (by_color1, long1)):
        for c, edges in groups.items():
            bad = {v for v, length in longest[c].items() if length >= threshold}
            moved.update(i for i in edges if sub.edges[i][0] in bad or sub.edges[i][1] in bad)
    ledger.charge("diameter:paths", threshold)
    coloring0 = PartialColoring.empty(g.m)
    coloring1 = PartialColoring.empty(g.m)
    e1p, e1pp = set(), set()
    tail_of = {}
    for i in range(sub.m):
        e = emap[i]
        if i in moved:
            e1pp.add(e)
            tail_of[e] = orient.tail(i)
        elif i in phi1:
            e1p.add(e)
            coloring1[e] = phi1[i]
            tail_of[e] = orient.tail(i)
        else:
            coloring0[e] = coloring[e]
    if e1pp:
        stars_graph, smap = g.edge_subgraph(sorted(e1pp))
        stars = star_forest_3t(stars_graph, frac(1) / 100, ledger, offset=k_prime)
        for i, e in enumerate(smap):
            coloring1[e] = stars[i]
    return DiameterReduction(coloring0, coloring1, e1p, e1pp, k_prime, threshold, tail_of)


@dataclass
class Shortening:
    coloring0: PartialColoring
    decolored: set[int]
    charged_to: dict[int, int] = field(default_factory=dict)  # decolored edge -> vertex it is charged to
    z: int = 0
    branch: str = ""


def shorten_to_inv_eps(g: MultiGraph, coloring: PartialColoring, rho, eps, stream=None,
                       ledger: RoundLedger | None = None, a: int | None = None, c_pre: float = 1.0,
                       check_pre: bool = True, c_len: int = C_LEN) -> Shortening:
    """Cut every monochromatic tree into pieces of diameter at most 4z, z = ceil(40 rho / eps).

    First the diameter is brought to O(log n / eps) with eps/10, then each
    rooted tree loses, in every block of z consecutive depths, the parent edges
    at one random depth offset. A vertex may lose at most ceil(eps a / 20) parent
    edges; that bad event is resampled by the LLL driver when the log n branch
    does not apply.
    """
    ledger = ledger if ledger is not None else RoundLedger()
    stream = as_stream(stream)
    e_frac = check_eps(eps)
    if a is None:
        a = arboricity_bound(g)
    delta = max(g.max_degree(), 2)
    log_branch = e_frac * a >= c_pre * log2n(g.n)
    lll_branch = e_frac ** 2 * a >= c_pre * frac(rho) * math.log2(delta)
    if check_pre and not (log_branch or lll_branch):
        raise PreconditionError("shortening needs a >= c min(log n / eps, rho log Delta / eps^2)")
    first = reduce_forest_diameter(g, coloring, e_frac / 10, stream.derive("first"), ledger, a, c_len)
    decolored = {e for e in range(g.m) if coloring[e] is not None and first.coloring0[e] is None}
    charged = dict(first.tail_of)
    z = max(2, ceil_frac(40 * frac(rho) / e_frac))
    k2 = ceil_frac(e_frac * a / 20)
    # root every tree of every color at its smallest vertex
    parent_edge: dict[tuple[int, int], int] = {}  # (color, vertex) -> parent edge id
    depth: dict[tuple[int, int], int] = {}
    anchor: dict[tuple[int, int], int] = {}  # deepest ancestor-or-self at a depth multiple of z
    classes = first.coloring0.classes()
    for c, edges in classes.items():
        adj: dict[int, list[int]] = {}
        for e in edges:
            u, v = g.edges[e]
            adj.setdefault(u, []).append(e)
            adj.setdefault(v, []).append(e)
        for root in sorted(adj):
            if (c, root) in depth:
                continue
            depth[(c, root)] = 0
            anchor[(c, root)] = root
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for e in adj[x]:
                    y = g.other(e, x)
                    if (c, y) in depth:
                        continue
                    depth[(c, y)] = depth[(c, x)] + 1
                    parent_edge[(c, y)] = e
                    anchor[(c, y)] = y if depth[(c, y)] % z == 0 else anchor[(c, x)]
                    queue.append(y)
    anchors = sorted({(c, anchor[(c, v)]) for (c, v) in parent_edge})

    def deleted_count(v, J):
        count = 0
        for c in colors_at.get(v, ()):
            u = anchor[(c, v)]
            if J[(c, u)] == depth[(c, v)] - depth[(c, u)]:
                count += 1
        return count

    colors_at: dict[int, list[int]] = {}
    for (c, v) in parent_edge:
        colors_at.setdefault(v, []).append(c)
    events = {v: tuple(sorted({(c, anchor[(c, v)]) for c in colors_at[v]})) for v in sorted(colors_at)}

    def sample(var, rng):
        return int(rng.integers(0, z))

    J = None
    if log_branch or not check_pre:
        # independent draws, redrawn a few times if some vertex loses too many parents
        branch = "log-n"
        for attempt in range(20):
            rng = stream.derive("offsets", attempt).generator()
            draw = {var: sample(var, rng) for var in anchors}
            if all(deleted_count(v, draw) <= k2 for v in events):
                J = draw
                break
        ledger.charge("shorten:offsets", 2 * z)
    if J is None:
        branch = "lll"
        res = distributed_lll(anchors, sample, events, lambda v, J: deleted_count(v, J) > k2,
                              stream.derive("lll"), ledger, n=g.n, radius=2 * z, label="shorten:lll")
        J = res.assignment
    coloring0 = first.coloring0.copy()
    for (c, v), e in parent_edge.items():
        u = anchor[(c, v)]
        if J[(c, u)] == depth[(c, v)] - depth[(c, u)]:
            coloring0[e] = None
            decolored.add(e)
            charged[e] = v
    return Shortening(coloring0, decolored, charged, z, branch)


# ---------------------------------------------------------------- pseudo-trees


class NotPseudoTreeError(ValueError):
    pass


class NoTwoStarSplitError(ValueError):
    """The pseudo-tree admits no decomposition into two star forests."""


# An edge state is (tail, color): the tail is the leaf side of its star.
_COLORS = (0, 1)


def _vertex_choice(fixed_out: list[int], fixed_in: list[int], child_opts: list[list[tuple[bool, int]]]):
    """Choose child edge states at one vertex.

    A vertex is consistent when its out-colors are distinct and none of them
    appears on an in-edge. ``child_opts`` lists, per child, the feasible
    (child_is_tail, color) states. Returns the chosen state per child or None.
    """
    if len(set(fixed_out)) != len(fixed_out):
        return None
    for out_set in ((), (0,), (1,), (0, 1)):
        s = set(out_set)
        if not s.issuperset(fixed_out) or s.intersection(fixed_in):
            continue
        free_out = [c for c in out_set if c not in fixed_out]
        choice = []
        forced = []
        for idx, opts in enumerate(child_opts):
            inward = [c for is_tail, c in opts if is_tail and c not in s]
            if inward:
                choice.append((True, inward[0]))
            else:
                choice.append(None)
                forced.append(idx)
        if len(forced) > len(free_out):
            continue
        ok = _assign_forced(forced, free_out, child_opts, choice)
        if ok:
            return choice
    return None


def _assign_forced(forced, free_out, child_opts, choice) -> bool:
    if not forced:
        return True
    idx = forced[0]
    for c in free_out:
        if (False, c) in child_opts[idx]:
            choice[idx] = (False, c)
            if _assign_forced(forced[1:], [x for x in free_out if x != c], child_opts, choice):
                return True
            choice[idx] = None
    return False


def _edge_view(state_at_vertex):
    """Split fixed edge states at a vertex into (out colors, in colors)."""
    outs = [c for is_tail, c in state_at_vertex if is_tail]
    ins = [c for is_tail, c in state_at_vertex if not is_tail]
    return outs, ins


def pseudotree_two_star_forests(g: MultiGraph) -> PartialColoring:
    """Exact split of a connected graph with at most one cycle into two star forests.

    Every vertex's edges are described by who is the leaf (tail) and which of
    the two colors is used; a dynamic program over the hanging trees and then
    around the cycle finds a consistent assignment or proves there is none
    (e.g. an odd cycle with a pendant edge at every cycle vertex).
    """
    n, m = g.n, g.m
    if n == 0 or m > n or len(connected_components(g)) != 1:
        raise NotPseudoTreeError("input must be connected with at most as many edges as vertices")
    # peel leaves to expose the cycle
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    queue = deque(v for v in range(n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = True
        for e in g.incident(v):
            u = g.other(e, v)
            if not removed[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    on_cycle = [v for v in range(n) if not removed[v]]
    cycle_edges = [e for e, (u, v) in enumerate(g.edges) if not removed[u] and not removed[v]]
    roots = on_cycle if on_cycle else [0]
    # hanging trees
    parent = [-1] * n
    parent_edge = [-1] * n
    order = []
    seen = set(roots)
    queue = deque(roots)
    cycle_set = set(cycle_edges)
    while queue:
        x = queue.popleft()
        order.append(x)
        for e in g.incident(x):
            if e in cycle_set:
                continue
            y = g.other(e, x)
            if y not in seen:
                seen.add(y)
                parent[y], parent_edge[y] = x, e
                queue.append(y)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order:
        if parent[v] >= 0:
            children[parent[v]].append(v)
    # feasible[v]: states of v's parent edge, from v's side: (v_is_tail, color)
    feasible: dict[int, list[tuple[bool, int]]] = {}
    for v in reversed(order):
        if parent[v] < 0:
            continue
        opts = []
        for is_tail in (True, False):
            for c in _COLORS:
                outs, ins = _edge_view([(is_tail, c)])
                kids = [feasible[w] for w in children[v]]
                if _vertex_choice(outs, ins, kids) is not None:
                    opts.append((is_tail, c))
        feasible[v] = opts
    colors: list[int | None] = [None] * m

    def settle(top, top_fixed):
        # choices are (child_is_tail, color), which is also the child's own view of that edge
        stack = [(top, top_fixed)]
        while stack:
            v, fixed = stack.pop()
            outs, ins = _edge_view(fixed)
            choice = _vertex_choice(outs, ins, [feasible[w] for w in children[v]])
            if choice is None:
                return False
            for w, state in zip(children[v], choice):
                colors[parent_edge[w]] = state[1]
                stack.append((w, [state]))
        return True

    if not on_cycle:
        if not settle(0, []):
            raise NoTwoStarSplitError("tree without a two-star-forest split")
        return PartialColoring(colors)
    cyc = _cycle_order(g, on_cycle, cycle_edges)
    verts, edges = cyc
    L = len(verts)
    # state of cycle edge i (between verts[i] and verts[i+1]): (tail_is_first, color)
    states = [(t, c) for t in (True, False) for c in _COLORS]

    def local(i, before, after):
        # fixed edges at verts[i]: edge i-1 (verts[i] is its second endpoint) and edge i (first endpoint)
        fixed = [(not before[0], before[1]), (after[0], after[1])]
        kids = [feasible[w] for w in children[verts[i]]]
        outs, ins = _edge_view(fixed)
        return _vertex_choice(outs, ins, kids) is not None

    for last in states:
        reach = {last: None}
        back = []
        for i in range(L):
            nxt = {}
            for prev in reach:
                for cur in states:
                    if cur not in nxt and local(i, prev, cur):
                        nxt[cur] = prev
            back.append(nxt)
            reach = nxt
        if last not in reach:
            continue
        chosen = [None] * L
        cur = last
        for i in range(L - 1, -1, -1):
            chosen[i] = cur
            cur = back[i][cur]
        for i in range(L):
            colors[edges[i]] = chosen[i][1]
        for i in range(L):
            before, after = chosen[i - 1], chosen[i]
            fixed = [(not before[0], before[1]), (after[0], after[1])]
            if not settle(verts[i], fixed):
                raise AssertionError("cycle state accepted but reconstruction failed")
        return PartialColoring(colors)
    raise NoTwoStarSplitError("this pseudo-tree has no split into two star forests")


def _cycle_order(g: MultiGraph, on_cycle: list[int], cycle_edges: list[int]):
    """Walk the cycle: vertices v0..v_{L-1} and edges f_i joining v_i and v_{i+1}."""
    start = on_cycle[0]
    verts = [start]
    edges = []
    used = set()
    cur = start
    cyc = set(cycle_edges)
    while True:
        nxt_edge = next(e for e in g.incident(cur) if e in cyc and e not in used)
        used.add(nxt_edge)
        edges.append(nxt_edge)
        cur = g.other(nxt_edge, cur)
        if cur == start:
            break
        verts.append(cur)
    return verts, edges
