"""Seeded test-graph families, including the path multigraph and the lower-bound gadgets."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .graph import MultiGraph


def path_multigraph(l: int, k: int) -> MultiGraph:
    """``l`` vertices on a line with ``k`` parallel edges between consecutive ones."""
    if l < 1 or k < 1:
        raise ValueError("path_multigraph needs l >= 1 and k >= 1")
    return MultiGraph(l, [(i, i + 1) for i in range(l - 1) for _ in range(k)])


def _bundle(p: int, q: int, mult: int) -> list[tuple[int, int]]:
    return [(p, q)] * mult


def lower_bound_G(a: int, t: int) -> MultiGraph:
    """Two parallel bundles x1x2, y1y2 of a//2 edges and two a-fold paths x1..y1, x2..y2.

    Each path has t+2 vertices. Vertex layout: x1 = 0, the first path's inner
    vertices 1..t, y1 = t+1, x2 = t+2, the second path's inner vertices, y2 = 2t+3.
    """
    if a < 2 or t < 1:
        raise ValueError("lower_bound_G needs a >= 2 and t >= 1")
    x1, y1, x2, y2 = 0, t + 1, t + 2, 2 * t + 3
    edges = _bundle(x1, x2, a // 2) + _bundle(y1, y2, a // 2)
    for start in (x1, x2):
        for i in range(t + 1):
            edges += _bundle(start + i, start + i + 1, a)
    return MultiGraph(2 * t + 4, edges)


def lower_bound_G_prime(a: int, t: int) -> MultiGraph:
    """``lower_bound_G`` with x1, x2 merged into x and y1, y2 merged into y.

    The result is an a-fold cycle on 2t+2 vertices: x = 0, y = t+1.
    """
    if a < 2 or t < 1:
        raise ValueError("lower_bound_G_prime needs a >= 2 and t >= 1")
    x, y = 0, t + 1
    first = [x] + list(range(1, t + 1)) + [y]
    second = [x] + list(range(t + 2, 2 * t + 2)) + [y]
    edges = []
    for path in (first, second):
        for p, q in zip(path, path[1:]):
            edges += _bundle(p, q, a)
    return MultiGraph(2 * t + 2, edges)


def k4_expanded(t: int) -> MultiGraph:
    """Simple version of ``lower_bound_G(2, t)``: each parallel pair becomes a K4.

    The two single edges x1x2 and y1y2 stay as they are; every double edge pq on
    the two paths gets two fresh vertices r, s and all six edges of K4 on p, q, r, s.
    """
    base = lower_bound_G(2, t)
    n = base.n
    edges = []
    seen = set()
    for u, v in base.edges:
        key = (u, v)
        if key in seen:
            continue
        seen.add(key)
        if base.edges.count(key) == 1:
            edges.append(key)
            continue
        r, s = n, n + 1
        n += 2
        quad = [u, v, r, s]
        edges += [(quad[i], quad[j]) for i in range(4) for j in range(i + 1, 4)]
    return MultiGraph(n, edges)


def random_spanning_tree(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform labelled spanning tree of K_n via a random Pruefer sequence."""
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return sorted(edges)


def random_forest_union(n: int, k: int, seed: int = 0) -> MultiGraph:
    """Union (as a multiset) of ``k`` independent uniform spanning trees; arboricity <= k."""
    if n < 1 or k < 0:
        raise ValueError("random_forest_union needs n >= 1 and k >= 0")
    rng = np.random.default_rng(seed)
    edges = []
    for _ in range(k):
        edges += random_spanning_tree(n, rng)
    return MultiGraph(n, edges)


def gnp(n: int, p: float, seed: int = 0) -> MultiGraph:
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        draws = rng.random(n - u - 1)
        edges += [(u, u + 1 + int(i)) for i in np.nonzero(draws < p)[0]]
    return MultiGraph(n, edges)


def star(leaves: int) -> MultiGraph:
    """K_{1,leaves} with center 0."""
    if leaves < 0:
        raise ValueError("star needs a nonnegative leaf count")
    return MultiGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


FAMILIES = {
    "path_multigraph": (path_multigraph, ("l", "k")),
    "lower_bound_G": (lower_bound_G, ("a", "t")),
    "lower_bound_G_prime": (lower_bound_G_prime, ("a", "t")),
    "k4_expanded": (k4_expanded, ("t",)),
    "random_forest_union": (random_forest_union, ("n", "k")),
    "gnp": (gnp, ("n", "p")),
    "star": (star, ("leaves",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
}
SEEDED = {"random_forest_union", "gnp"}


@dataclass
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def build(self) -> MultiGraph:
        return generate(self)


def generate(spec: GeneratorSpec) -> MultiGraph:
    if spec.family not in FAMILIES:
        raise ValueError(f"unknown family {spec.family!r}; choose from {sorted(FAMILIES)}")
    fn, names = FAMILIES[spec.family]
    missing = [k for k in names if k not in spec.params]
    if missing:
        raise ValueError(f"family {spec.family} needs parameters {missing}")
    args = [spec.params[k] for k in names]
    if spec.family in SEEDED:
        return fn(*args, seed=spec.seed)
    return fn(*args)
