"""Exact density oracles: arboricity, pseudo-arboricity and degeneracy.

Arboricity is computed by enumerating vertex subsets, so it is limited to
small graphs. Pseudo-arboricity uses max-flow and works at any size.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import maximum_flow

from .graph import MultiGraph
from .structures import Orientation

EXACT_LIMIT = 18


class GraphTooLargeError(ValueError):
    pass


@dataclass
class DensityCertificate:
    value: int
    witness_vertices: list[int] = field(default_factory=list)

    def recompute(self, g: MultiGraph, kind: str) -> int:
        """Re-evaluate the defining ratio on the witness ("arboricity" or "pseudo")."""
        s = set(self.witness_vertices)
        e = sum(1 for u, v in g.edges if u in s and v in s)
        denom = len(s) - 1 if kind == "arboricity" else len(s)
        if denom <= 0:
            return 0
        return -(-e // denom)


def _subset_tables(g: MultiGraph, limit: int):
    if g.n > limit:
        raise GraphTooLargeError(f"exact oracle is limited to {limit} vertices, graph has {g.n}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    sizes = np.zeros_like(masks)
    for v in range(g.n):
        sizes += (masks >> v) & 1
    counts = np.zeros_like(masks)
    for (u, v), mult in Counter((min(u, v), max(u, v)) for u, v in g.edges).items():
        counts += mult * (((masks >> u) & (masks >> v)) & 1)
    return masks, sizes, counts


def _mask_vertices(mask: int, n: int) -> list[int]:
    return [v for v in range(n) if (mask >> v) & 1]


def nash_williams_arboricity(g: MultiGraph, limit: int = EXACT_LIMIT) -> DensityCertificate:
    """max over subsets H with |H| >= 2 of ceil(|E(H)| / (|H| - 1))."""
    if g.m == 0:
        return DensityCertificate(0, [])
    masks, sizes, counts = _subset_tables(g, limit)
    ok = sizes >= 2
    ratio = np.where(ok, -(-counts // np.maximum(sizes - 1, 1)), -1)
    best = int(np.argmax(ratio))
    return DensityCertificate(int(ratio[best]), _mask_vertices(int(masks[best]), g.n))


def hakimi_pseudo_arboricity(g: MultiGraph, limit: int = EXACT_LIMIT) -> DensityCertificate:
    """Brute-force max over nonempty subsets of ceil(|E(H)| / |H|)."""
    if g.m == 0:
        return DensityCertificate(0, [])
    if any(u == v for u, v in g.edges):
        raise ValueError("brute-force pseudo-arboricity expects a loopless graph")
    masks, sizes, counts = _subset_tables(g, limit)
    ratio = np.where(sizes >= 1, -(-counts // np.maximum(sizes, 1)), -1)
    best = int(np.argmax(ratio))
    return DensityCertificate(int(ratio[best]), _mask_vertices(int(masks[best]), g.n))


class _FlowNetwork:
    # node layout: 0 = source, 1..m = edges, m+1..m+n = vertices, m+n+1 = sink
    def __init__(self, g: MultiGraph):
        self.g = g
        m, n = g.m, g.n
        self.sink = m + n + 1
        rows, cols = [], []
        for e, (u, v) in enumerate(g.edges):
            rows.append(0)
            cols.append(1 + e)
            rows.append(1 + e)
            cols.append(1 + m + u)
            if v != u:
                rows.append(1 + e)
                cols.append(1 + m + v)
        self.fixed = (rows, cols)

    def solve(self, k: int):
        g = self.g
        rows, cols = list(self.fixed[0]), list(self.fixed[1])
        caps = [1] * len(rows)
        for v in range(g.n):
            rows.append(1 + g.m + v)
            cols.append(self.sink)
            caps.append(k)
        size = self.sink + 1
        cap = sp.csr_matrix((np.array(caps, dtype=np.int32), (rows, cols)), shape=(size, size))
        res = maximum_flow(cap, 0, self.sink)
        return res.flow_value, cap, res.flow


def pseudo_arboricity(g: MultiGraph) -> tuple[DensityCertificate, Orientation]:
    """Minimum k admitting a k-orientation, with an optimal orientation and a dense witness."""
    if g.m == 0:
        return DensityCertificate(0, []), Orientation(g, [])
    net = _FlowNetwork(g)
    lo = max(1, -(-g.m // g.n))  # every k below ceil(m/n) is infeasible
    hi = max(lo, max(sum(1 for _ in g.incident(v)) for v in range(g.n)))
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        value, _, flow = net.solve(mid)
        if value == g.m:
            hi = mid
            best = (mid, flow)
        else:
            lo = mid + 1
    if best is None or best[0] != lo:
        value, _, flow = net.solve(lo)
        assert value == g.m
        best = (lo, flow)
    k, flow = best
    flow = flow.tocsr()
    tails = []
    for e, (u, v) in enumerate(g.edges):
        tails.append(u if flow[1 + e, 1 + g.m + u] > 0 else v)
    orientation = Orientation(g, [tails[e] == g.edges[e][0] for e in range(g.m)])
    witness = _dense_witness(g, net, k)
    return DensityCertificate(k, witness), orientation


def _dense_witness(g: MultiGraph, net: _FlowNetwork, k: int) -> list[int]:
    if k <= 1:
        # any single edge certifies ceil(1/2) = 1
        u, v = g.edges[0]
        return sorted({u, v})
    _, cap, flow = net.solve(k - 1)
    residual = (cap - flow).tocsr()
    residual.eliminate_zeros()
    seen = np.zeros(net.sink + 1, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        start, end = residual.indptr[x], residual.indptr[x + 1]
        for y, c in zip(residual.indices[start:end], residual.data[start:end]):
            if c > 0 and not seen[y]:
                seen[y] = True
                stack.append(int(y))
    return [v for v in range(g.n) if seen[1 + g.m + v]]


def degeneracy(g: MultiGraph) -> tuple[int, list[int]]:
    """Min-degree peeling (ties to the lower index). Returns (value, elimination order)."""
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    value = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        value = max(value, d)
        for e in g.incident(v):
            u = g.other(e, v)
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return value, order


def degeneracy_orientation(g: MultiGraph, order: list[int] | None = None) -> Orientation:
    """Orient every edge toward the endpoint removed later in the peeling order."""
    if order is None:
        order = degeneracy(g)[1]
    pos = {v: i for i, v in enumerate(order)}
    return Orientation(g, [pos[u] < pos[v] for u, v in g.edges])


def arboricity_bound(g: MultiGraph, limit: int = EXACT_LIMIT) -> int:
    """Exact arboricity for small graphs, else the tightest bound from the flow oracle."""
    if g.n <= limit:
        return nash_williams_arboricity(g, limit).value
    a_star = pseudo_arboricity(g)[0].value
    return a_star + 1 if g.is_simple() else 2 * a_star
