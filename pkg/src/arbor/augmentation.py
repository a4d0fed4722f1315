"""Augmenting sequences for partial list-forest decompositions.

An augmenting sequence (e1, ..., el, c) shifts colors one step down the chain:
e_i takes the old color of e_{i+1} and e_l takes the fresh color c. The chain
is found by a layered search over fundamental paths C(e, c), the unique path
between the endpoints of e in the c-colored forest.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import MultiGraph
from .runtime import RoundLedger
from .structures import PaletteSet, PartialColoring
from .util import PreconditionError, frac


class InvalidColoringError(ValueError):
    """A color class contains a cycle."""


class InvalidSequenceError(ValueError):
    def __init__(self, report: "SequenceReport"):
        super().__init__(f"not an augmenting sequence: {report.condition} at index {report.index}: {report.message}")
        self.report = report


class SearchRadiusExceeded(RuntimeError):
    """The layered search ran past its radius cap; palettes are probably too small."""

    def __init__(self, edge: int, layers: int, stuck: bool = False):
        why = "no new edges to explore" if stuck else f"exceeded {layers} layers"
        super().__init__(f"augmenting search from edge {edge}: {why}")
        self.edge = edge
        self.layers = layers
        self.stuck = stuck


@dataclass
class AugmentingSequence:
    edges: tuple[int, ...]
    final_color: int
    layers: tuple[int, ...] = ()  # |E_1|, |E_2|, ... recorded by the search

    def __len__(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {"edges": list(self.edges), "color": self.final_color}

    @classmethod
    def from_json(cls, doc) -> "AugmentingSequence":
        return cls(tuple(int(e) for e in doc["edges"]), int(doc["color"]))


@dataclass
class SequenceReport:
    valid: bool
    condition: str | None = None  # "A1" .. "A5"
    index: int | None = None  # 1-based position in the sequence
    message: str = ""


class ColorForests:
    """Per-color adjacency plus a lazily rooted spanning structure for path queries.

    Owns a reference to ``coloring`` and must be the only writer while in use
    (all changes go through ``set_color``). Rooted components are cached and
    dropped whenever an edge enters or leaves them.
    """

    def __init__(self, g: MultiGraph, coloring: PartialColoring):
        if any(u == v for u, v in g.edges):
            raise PreconditionError("forest decompositions need a loopless graph")
        self.g = g
        self.coloring = coloring
        self.adj: dict[int, dict[int, set[int]]] = {}
        self._parent: dict[int, dict[int, tuple[int, int]]] = {}  # color -> v -> (edge, parent vertex)
        self._depth: dict[int, dict[int, int]] = {}
        self._root: dict[int, dict[int, int]] = {}
        self._members: dict[tuple[int, int], list[int]] = {}
        for e, c in enumerate(coloring.colors):
            if c is not None:
                self._attach(e, c)

    def _attach(self, e: int, c: int) -> None:
        u, v = self.g.edges[e]
        cadj = self.adj.setdefault(c, {})
        cadj.setdefault(u, set()).add(e)
        cadj.setdefault(v, set()).add(e)

    def _detach(self, e: int, c: int) -> None:
        u, v = self.g.edges[e]
        cadj = self.adj[c]
        for x in (u, v):
            cadj[x].discard(e)
            if not cadj[x]:
                del cadj[x]

    def _invalidate(self, c: int, x: int) -> None:
        roots = self._root.get(c)
        if not roots or x not in roots:
            return
        for y in self._members.pop((c, roots[x])):
            del roots[y]
            del self._parent[c][y]
            del self._depth[c][y]

    def set_color(self, e: int, c: int | None) -> None:
        old = self.coloring[e]
        if old == c:
            return
        u, v = self.g.edges[e]
        if old is not None:
            self._invalidate(old, u)
            self._detach(e, old)
        if c is not None:
            self._link(e, c, u, v)
        self.coloring[e] = c

    def _link(self, e: int, c: int, u: int, v: int) -> None:
        """Add e to color c, hanging the smaller rooted component below the larger one."""
        self._ensure_rooted(c, u)
        self._ensure_rooted(c, v)
        roots = self._root[c]
        ru, rv = roots[u], roots[v]
        if ru == rv:  # closes a cycle; leave the cache to report it later
            self._invalidate(c, u)
            self._attach(e, c)
            return
        if len(self._members[(c, ru)]) > len(self._members[(c, rv)]):
            u, v, ru, rv = v, u, rv, ru
        # re-root u's component at u, then hang it from v through e
        parent, depth = self._parent[c], self._depth[c]
        cadj = self.adj.get(c, {})
        big = self._members[(c, rv)]
        del self._members[(c, ru)]
        roots[u], parent[u], depth[u] = rv, (e, v), depth[v] + 1
        big.append(u)
        queue = deque([u])
        while queue:
            y = queue.popleft()
            for f in cadj.get(y, ()):
                z = self.g.other(f, y)
                if roots[z] == rv:
                    continue
                roots[z], parent[z], depth[z] = rv, (f, y), depth[y] + 1
                big.append(z)
                queue.append(z)
        self._attach(e, c)

    def _ensure_rooted(self, c: int, x: int) -> None:
        roots = self._root.setdefault(c, {})
        if x in roots:
            return
        parent = self._parent.setdefault(c, {})
        depth = self._depth.setdefault(c, {})
        cadj = self.adj.get(c, {})
        roots[x], parent[x], depth[x] = x, (-1, -1), 0
        members = [x]
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for f in sorted(cadj.get(y, ())):
                if f == parent[y][0]:
                    continue
                z = self.g.other(f, y)
                if z in roots:
                    raise InvalidColoringError(f"color {c} contains a cycle through edge {f}")
                roots[z], parent[z], depth[z] = x, (f, y), depth[y] + 1
                members.append(z)
                queue.append(z)
        self._members[(c, x)] = members

    def connected(self, c: int, u: int, v: int) -> bool:
        cadj = self.adj.get(c)
        if not cadj or u not in cadj or v not in cadj:
            return False
        self._ensure_rooted(c, u)
        roots = self._root[c]
        return roots.get(v) == roots[u]

    def path(self, e: int, c: int) -> list[int]:
        """C(e, c) as an edge list ordered from the first endpoint of e; [e] when e has color c."""
        if self.coloring[e] == c:
            return [e]
        u, v = self.g.edges[e]
        if not self.connected(c, u, v):
            return []
        parent, depth = self._parent[c], self._depth[c]
        left, right = [], []
        a, b = u, v
        while depth[a] > depth[b]:
            left.append(parent[a][0])
            a = parent[a][1]
        while depth[b] > depth[a]:
            right.append(parent[b][0])
            b = parent[b][1]
        while a != b:
            left.append(parent[a][0])
            a = parent[a][1]
            right.append(parent[b][0])
            b = parent[b][1]
        return left + right[::-1]


def fundamental_path(g: MultiGraph, coloring: PartialColoring, e: int, c: int) -> list[int]:
    """C(e, c) by a plain BFS over color class c (the reference route)."""
    if coloring[e] == c:
        return [e]
    cls = [f for f, col in enumerate(coloring.colors) if col == c]
    adj: dict[int, list[int]] = {}
    seen_parent = list(range(g.n))

    def find(x):
        while seen_parent[x] != x:
            seen_parent[x] = seen_parent[seen_parent[x]]
            x = seen_parent[x]
        return x

    for f in cls:
        a, b = g.edges[f]
        ra, rb = find(a), find(b)
        if ra == rb:
            raise InvalidColoringError(f"color {c} contains a cycle through edge {f}")
        seen_parent[ra] = rb
        adj.setdefault(a, []).append(f)
        adj.setdefault(b, []).append(f)
    u, v = g.edges[e]
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for f in adj.get(x, ()):
            y = g.other(f, x)
            if y not in prev:
                prev[y] = (f, x)
                queue.append(y)
    if v not in prev or u == v:
        return []
    out = []
    x = v
    while prev[x] is not None:
        f, x = prev[x]
        out.append(f)
    return out[::-1]


def _path_set(F: ColorForests, cache: dict, e: int, c: int) -> set[int]:
    key = (e, c)
    if key not in cache:
        cache[key] = set(F.path(e, c))
    return cache[key]


def _a3_violations(F: ColorForests, coloring, palettes, edges, cache):
    """Yield (j, i) with j < i - 1 and e_i on C(e_j, psi(e_i)); list-aware when palettes are given."""
    for j in range(len(edges)):
        for i in range(len(edges) - 1, j + 1, -1):
            col = coloring[edges[i]]
            if col is None:
                continue
            if palettes is not None and col not in palettes[edges[j]]:
                continue
            if edges[i] in _path_set(F, cache, edges[j], col):
                yield j, i


def is_augmenting_sequence(g: MultiGraph, coloring: PartialColoring, palettes: PaletteSet | None,
                           P: AugmentingSequence, forests: ColorForests | None = None,
                           list_aware: bool = True) -> SequenceReport:
    """Check A1..A5 in order and report the first violation (never raises).

    With ``list_aware`` the no-back-incidence condition only counts e_i on
    C(e_j, psi(e_i)) when psi(e_i) is in Q(e_j); those are the only instances
    the validity argument relies on. A5 is skipped when ``palettes`` is None.
    """
    try:
        F = forests if forests is not None else ColorForests(g, coloring)
        edges = list(P.edges)
        if not edges:
            return SequenceReport(False, "A1", 1, "empty sequence")
        if any(not 0 <= e < g.m for e in edges):
            return SequenceReport(False, "A2", None, "edge id out of range")
        if coloring[edges[0]] is not None:
            return SequenceReport(False, "A1", 1, f"edge {edges[0]} already has color {coloring[edges[0]]}")
        cache: dict = {}
        for i in range(1, len(edges)):
            col = coloring[edges[i]]
            if col is None or edges[i] not in _path_set(F, cache, edges[i - 1], col):
                return SequenceReport(False, "A2", i + 1, f"edge {edges[i]} is not on C(e_{i}, psi(e_{i + 1}))")
        for j, i in _a3_violations(F, coloring, palettes if list_aware else None, edges, cache):
            return SequenceReport(False, "A3", i + 1, f"edge {edges[i]} lies on C(e_{j + 1}, psi(e_{i + 1}))")
        if _path_set(F, cache, edges[-1], P.final_color):
            return SequenceReport(False, "A4", len(edges), f"C(e_last, {P.final_color}) is not empty")
        if palettes is not None:
            for i in range(len(edges) - 1):
                if coloring[edges[i + 1]] not in palettes[edges[i]]:
                    return SequenceReport(False, "A5", i + 1, f"color {coloring[edges[i + 1]]} not in Q(e_{i + 1})")
            if P.final_color not in palettes[edges[-1]]:
                return SequenceReport(False, "A5", len(edges), f"final color {P.final_color} not in Q(e_last)")
    except InvalidColoringError as err:
        return SequenceReport(False, "A2", None, str(err))
    return SequenceReport(True)


def _apply_in_place(F: ColorForests, P: AugmentingSequence) -> None:
    new = [F.coloring[f] for f in P.edges[1:]] + [P.final_color]
    for f, c in zip(P.edges, new):
        F.set_color(f, c)


def apply_augmentation(g: MultiGraph, coloring: PartialColoring, P: AugmentingSequence,
                       palettes: PaletteSet | None = None, check: bool = True) -> PartialColoring:
    """psi (+) P as a new coloring; refuses sequences that fail validation."""
    if check:
        report = is_augmenting_sequence(g, coloring, palettes, P)
        if not report.valid:
            raise InvalidSequenceError(report)
    out = coloring.copy()
    new = [coloring[f] for f in P.edges[1:]] + [P.final_color]
    for f, c in zip(P.edges, new):
        out[f] = c
    return out


def default_radius_cap(n: int, eps=None) -> int:
    if eps is None:
        return n + 1
    e = frac(eps)
    if e <= 0:
        raise PreconditionError("eps must be positive")
    return 2 * (math.ceil(math.log(max(n, 2)) / math.log(1 + float(e))) + 2)


def find_almost_augmenting(g: MultiGraph, coloring: PartialColoring, palettes: PaletteSet, e_init: int,
                           radius_cap: int | None = None, eps=None,
                           forests: ColorForests | None = None) -> AugmentingSequence:
    """Layered search from an uncolored edge; the result satisfies A1, A2, A4 and A5.

    Layer E_{i+1} adds every edge of some C(e, c), e in E_i, c in Q(e), that
    touches an endpoint of E_i. The parent pointer of a new edge is the
    smallest (edge, color) pair proposing it. The search stops at the first
    (e, c) with C(e, c) empty, scanning new edges by id and colors in order.
    """
    if coloring[e_init] is not None:
        raise PreconditionError(f"edge {e_init} is already colored")
    F = forests if forests is not None else ColorForests(g, coloring)
    cap = radius_cap if radius_cap is not None else default_radius_cap(g.n, eps)
    in_e = {e_init}
    parent: dict[int, int] = {}
    touched: set[int] = set()
    pending: dict[int, list[tuple[int, int, int]]] = {}
    new_edges = [e_init]
    layers = [1]
    for _ in range(cap):
        fresh_vertices = sorted({x for f in new_edges for x in g.edges[f]} - touched)
        touched.update(fresh_vertices)
        proposals: list[tuple[int, int, int]] = []
        for x in fresh_vertices:
            proposals.extend(pending.pop(x, ()))
        # the cheap emptiness test runs first: a hit ends the search in this layer
        for e in new_edges:
            u, v = g.edges[e]
            for c in palettes[e]:
                if F.coloring[e] != c and not F.connected(c, u, v):
                    chain = [e]
                    while chain[-1] in parent:
                        chain.append(parent[chain[-1]])
                    return AugmentingSequence(tuple(chain[::-1]), c, tuple(layers))
        for e in new_edges:
            for c in palettes[e]:
                for f in F.path(e, c):
                    if f in in_e:
                        continue
                    a, b = g.edges[f]
                    if a in touched or b in touched:
                        proposals.append((e, c, f))
                    else:
                        pending.setdefault(a, []).append((e, c, f))
                        pending.setdefault(b, []).append((e, c, f))
        best: dict[int, tuple[int, int]] = {}
        for e, c, f in proposals:
            if f not in in_e and (f not in best or (e, c) < best[f]):
                best[f] = (e, c)
        if not best:
            raise SearchRadiusExceeded(e_init, len(layers), stuck=True)
        for f, (e, _) in best.items():
            parent[f] = e
            in_e.add(f)
        new_edges = sorted(best)
        layers.append(len(in_e))
    raise SearchRadiusExceeded(e_init, cap)


def shortcut(g: MultiGraph, coloring: PartialColoring, P: AugmentingSequence, palettes: PaletteSet | None = None,
             forests: ColorForests | None = None) -> AugmentingSequence:
    """Splice out back-incidences until the no-back-incidence condition holds.

    Each pass takes the smallest j and, for it, the largest i with e_i on
    C(e_j, psi(e_i)), and keeps (.., e_j, e_i, ..). With palettes, only
    psi(e_i) in Q(e_j) counts, so the splice keeps palette membership.
    """
    F = forests if forests is not None else ColorForests(g, coloring)
    edges = list(P.edges)
    cache: dict = {}
    while True:
        hit = next(_a3_violations(F, coloring, palettes, edges, cache), None)
        if hit is None:
            return AugmentingSequence(tuple(edges), P.final_color, P.layers)
        j, i = hit
        edges = edges[: j + 1] + edges[i:]


def color_edge_set(g: MultiGraph, coloring: PartialColoring, palettes: PaletteSet, L: Iterable[int],
                   ledger: RoundLedger | None = None, eps=None, radius_cap: int | None = None,
                   forests: ColorForests | None = None, check: bool = True,
                   trace: list | None = None) -> PartialColoring:
    """Color every uncolored edge of L by search, shortcut and augmentation, in id order.

    Without ``forests`` the input coloring is left untouched and a new one is
    returned. With ``forests`` the augmentations go through it, so its coloring
    is updated in place and also returned.
    """
    if forests is None:
        coloring = coloring.copy()
        F = ColorForests(g, coloring)
    else:
        F = forests
        coloring = F.coloring
    deepest = 0
    for e in sorted(set(L)):
        if coloring[e] is not None:
            continue
        P = find_almost_augmenting(g, coloring, palettes, e, radius_cap, eps, forests=F)
        deepest = max(deepest, len(P.layers))
        P = shortcut(g, coloring, P, palettes, forests=F)
        if check:
            report = is_augmenting_sequence(g, coloring, palettes, P, forests=F)
            if not report.valid:
                raise InvalidSequenceError(report)
        _apply_in_place(F, P)
        if trace is not None:
            trace.append(P)
    if ledger is not None and deepest:
        # the sequence stays inside N^layers(e); gather that ball and write back
        ledger.charge("color-edge-set", 2 * deepest)
    return coloring
