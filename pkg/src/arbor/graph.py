"""Multigraph representation with stable edge ids, plus BFS-based locality queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MultiGraph:
    """Undirected multigraph on vertices ``0..n-1``.

    Edges keep the position they were given in; that position is the edge id
    used everywhere else (colorings, orientations, palettes are all indexed by
    it). Parallel edges are separate ids. Loops are rejected unless
    ``allow_loops`` is set, which only the orientation code relies on.
    """

    __slots__ = ("n", "edges", "allow_loops", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), allow_loops: bool = False):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = int(n)
        self.allow_loops = allow_loops
        clean = []
        for i, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v and not allow_loops:
                raise ValueError(f"edge {i} is a loop at vertex {u}")
            clean.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(clean)
        adj: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append(e)
            if v != u:
                adj[v].append(e)
        self._adj = tuple(tuple(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids touching ``v`` in increasing order."""
        return self._adj[v]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` (loops excluded)."""
        seen = []
        mark = set()
        for e in self._adj[v]:
            u = self.other(e, v)
            if u != v and u not in mark:
                mark.add(u)
                seen.append(u)
        return seen

    def is_simple(self) -> bool:
        pairs = set()
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            if u == v or key in pairs:
                return False
            pairs.add(key)
        return True

    def edge_subgraph(self, eids: Iterable[int]) -> tuple["MultiGraph", list[int]]:
        """Same vertex set, only the listed edges. Returns the graph and new->old edge ids."""
        keep = sorted(set(eids))
        return MultiGraph(self.n, [self.edges[e] for e in keep], self.allow_loops), keep

    def induced(self, vertices: Iterable[int]) -> "Neighborhood":
        vmap = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vmap)}
        emap = [e for e, (u, v) in enumerate(self.edges) if u in index and v in index]
        sub = MultiGraph(len(vmap), [(index[self.edges[e][0]], index[self.edges[e][1]]) for e in emap],
                         self.allow_loops)
        return Neighborhood(sub, vmap, emap)

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "MultiGraph":
        header = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(lineno, f"expected two integers, got {raw!r}")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(lineno, f"expected two integers, got {raw!r}") from None
            if header is None:
                if a < 0 or b < 0:
                    raise GraphFormatError(lineno, "negative size in header")
                header = (a, b)
                continue
            n = header[0]
            if not (0 <= a < n and 0 <= b < n):
                raise GraphFormatError(lineno, f"vertex index out of range 0..{n - 1}")
            if a == b:
                raise GraphFormatError(lineno, f"loop at vertex {a}")
            edges.append((a, b))
        if header is None:
            raise GraphFormatError(1, "missing 'n m' header")
        if len(edges) != header[1]:
            raise GraphFormatError(lineno if text else 1,
                                   f"header announces {header[1]} edges, found {len(edges)}")
        return cls(header[0], edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


@dataclass
class Neighborhood:
    graph: MultiGraph
    vertex_map: list[int]  # local vertex -> original vertex
    edge_map: list[int]  # local edge id -> original edge id


def bfs_distances(g: MultiGraph, sources: Iterable[int], radius: int | None = None,
                  edge_ok=None) -> dict[int, int]:
    """Multi-source BFS distances, optionally cut off at ``radius``.

    ``edge_ok`` may restrict which edge ids can be traversed.
    """
    dist = {}
    queue = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        d = dist[v]
        if radius is not None and d >= radius:
            continue
        for e in g.incident(v):
            if edge_ok is not None and not edge_ok(e):
                continue
            u = g.other(e, v)
            if u not in dist:
                dist[u] = d + 1
                queue.append(u)
    return dist


def ball(g: MultiGraph, sources: Iterable[int], radius: int) -> set[int]:
    return set(bfs_distances(g, sources, radius))


def induced_edges(g: MultiGraph, vertices: set[int]) -> list[int]:
    """Edge ids with both endpoints in ``vertices``."""
    out = set()
    for v in vertices:
        for e in g.incident(v):
            if g.other(e, v) in vertices:
                out.add(e)
    return sorted(out)


def neighborhood(g: MultiGraph, center, r: int) -> Neighborhood:
    """Induced subgraph on the vertices within distance ``r`` of ``center``.

    ``center`` is a vertex, a collection of vertices, or ``("edges", ids)``
    for an edge set (distance measured from the edges' endpoints).
    """
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if isinstance(center, int):
        sources = [center]
    elif isinstance(center, tuple) and len(center) == 2 and center[0] == "edges":
        sources = sorted({x for e in center[1] for x in g.edges[e]})
    else:
        sources = sorted(set(center))
    if not sources:
        raise ValueError("empty center set")
    return g.induced(bfs_distances(g, sources, r))


def power_graph(g: MultiGraph, r: int) -> MultiGraph:
    """Simple graph with an edge uv whenever 1 <= dist(u, v) <= r."""
    if r < 1:
        raise ValueError("power graph needs r >= 1")
    edges = []
    for v in range(g.n):
        for u, d in sorted(bfs_distances(g, [v], r).items()):
            if u > v and d >= 1:
                edges.append((v, u))
    return MultiGraph(g.n, edges)


def connected_components(g: MultiGraph, vertices: Iterable[int] | None = None,
                         edge_ok=None) -> list[list[int]]:
    """Components (sorted vertex lists, ordered by smallest vertex).

    With ``vertices`` given, only the induced subgraph on them is considered.
    """
    allowed = None if vertices is None else set(vertices)
    order = range(g.n) if allowed is None else sorted(allowed)
    seen = set()
    comps = []
    for s in order:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.incident(v):
                if edge_ok is not None and not edge_ok(e):
                    continue
                u = g.other(e, v)
                if u in seen or (allowed is not None and u not in allowed):
                    continue
                seen.add(u)
                comp.append(u)
                queue.append(u)
        comps.append(sorted(comp))
    return comps


def eccentricity(g: MultiGraph, v: int, within: set[int] | None = None) -> int:
    """Largest BFS distance from ``v``, optionally inside the induced subgraph on ``within``."""
    if within is None:
        return max(bfs_distances(g, [v]).values())
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for e in g.incident(x):
            u = g.other(e, x)
            if u in within and u not in dist:
                dist[u] = dist[x] + 1
                queue.append(u)
    return max(dist.values())
