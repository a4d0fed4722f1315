"""Per-edge data attached to a graph: orientations, partial colorings and palettes."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import MultiGraph


class Orientation:
    """Direction per edge id; ``to_v[e]`` means edge (u, v) points u -> v.

    The tail of an edge counts towards the outdegree. A loop always counts 1
    for its vertex and is never reversed.
    """

    __slots__ = ("graph", "to_v")

    def __init__(self, graph: MultiGraph, to_v: Sequence[bool] | None = None):
        self.graph = graph
        if to_v is None:
            to_v = [True] * graph.m
        if len(to_v) != graph.m:
            raise ValueError("orientation length differs from the edge count")
        self.to_v = [bool(x) for x in to_v]

    @classmethod
    def toward_higher(cls, g: MultiGraph) -> "Orientation":
        return cls(g, [u < v for u, v in g.edges])

    @classmethod
    def from_heads(cls, g: MultiGraph, heads: Sequence[int]) -> "Orientation":
        return cls(g, [g.edges[e][1] == heads[e] for e in range(g.m)])

    def tail(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return u if self.to_v[e] else v

    def head(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return v if self.to_v[e] else u

    def reverse(self, e: int) -> None:
        u, v = self.graph.edges[e]
        if u != v:
            self.to_v[e] = not self.to_v[e]

    def out_edges(self, v: int) -> list[int]:
        return [e for e in self.graph.incident(v) if self.tail(e) == v]

    def outdegrees(self) -> list[int]:
        out = [0] * self.graph.n
        for e in range(self.graph.m):
            out[self.tail(e)] += 1
        return out

    def max_outdegree(self) -> int:
        return max(self.outdegrees(), default=0)

    def is_acyclic(self) -> bool:
        g = self.graph
        indeg = [0] * g.n
        for e in range(g.m):
            if self.tail(e) == self.head(e):
                return False
            indeg[self.head(e)] += 1
        queue = deque(v for v in range(g.n) if indeg[v] == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for e in self.out_edges(v):
                h = self.head(e)
                indeg[h] -= 1
                if indeg[h] == 0:
                    queue.append(h)
        return seen == g.n

    def copy(self) -> "Orientation":
        return Orientation(self.graph, list(self.to_v))

    def to_json(self) -> list[int]:
        return [1 if x else 0 for x in self.to_v]

    def __eq__(self, other) -> bool:
        return isinstance(other, Orientation) and self.to_v == other.to_v


class PartialColoring:
    """Optional color per edge id (``None`` = uncolored). Colors are ints."""

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[Optional[int]]):
        self.colors: list[Optional[int]] = [None if c is None else int(c) for c in colors]

    @classmethod
    def empty(cls, m: int) -> "PartialColoring":
        return cls([None] * m)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, e: int) -> Optional[int]:
        return self.colors[e]

    def __setitem__(self, e: int, c: Optional[int]) -> None:
        self.colors[e] = c

    def copy(self) -> "PartialColoring":
        return PartialColoring(self.colors)

    def used_colors(self) -> list[int]:
        return sorted({c for c in self.colors if c is not None})

    def num_colors(self) -> int:
        return len(self.used_colors())

    def uncolored(self) -> list[int]:
        return [e for e, c in enumerate(self.colors) if c is None]

    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            if c is not None:
                out.setdefault(c, []).append(e)
        return out

    def to_json(self) -> dict:
        return {"colors": self.num_colors(), "assignment": list(self.colors)}

    @classmethod
    def from_json(cls, doc) -> "PartialColoring":
        if isinstance(doc, dict):
            doc = doc["assignment"]
        return cls(doc)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialColoring) and self.colors == other.colors


class PaletteError(ValueError):
    """A palette is too small for the requested algorithm."""

    def __init__(self, edge: int, size: int, needed: int):
        super().__init__(f"edge {edge} has a palette of {size} colors, needs at least {needed}")
        self.edge = edge
        self.size = size
        self.needed = needed


class PaletteSet:
    """Admissible color lists Q(e), one per edge id, sorted and duplicate-free."""

    __slots__ = ("lists", "universe")

    def __init__(self, lists: Iterable[Iterable[int]], universe: Iterable[int] | None = None):
        self.lists: list[tuple[int, ...]] = []
        for e, q in enumerate(lists):
            q = [int(c) for c in q]
            if len(set(q)) != len(q):
                raise ValueError(f"palette of edge {e} has duplicate colors")
            self.lists.append(tuple(sorted(q)))
        if universe is None:
            self.universe = tuple(sorted({c for q in self.lists for c in q}))
        else:
            self.universe = tuple(sorted(set(int(c) for c in universe)))
            allowed = set(self.universe)
            for e, q in enumerate(self.lists):
                if not allowed.issuperset(q):
                    raise ValueError(f"palette of edge {e} uses colors outside the universe")

    @classmethod
    def uniform(cls, m: int, k: int, start: int = 0) -> "PaletteSet":
        q = tuple(range(start, start + k))
        return cls([q] * m, universe=q)

    @classmethod
    def random(cls, m: int, universe_size: int, size: int, rng: np.random.Generator) -> "PaletteSet":
        if size > universe_size:
            raise ValueError("palette size exceeds the universe")
        lists = [rng.choice(universe_size, size=size, replace=False).tolist() for _ in range(m)]
        return cls(lists, universe=range(universe_size))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, e: int) -> tuple[int, ...]:
        return self.lists[e]

    def min_size(self) -> int:
        return min((len(q) for q in self.lists), default=0)

    def require(self, needed: int, edges: Iterable[int] | None = None) -> None:
        for e in (range(len(self.lists)) if edges is None else edges):
            if len(self.lists[e]) < needed:
                raise PaletteError(e, len(self.lists[e]), needed)

    def restrict(self, eids: Sequence[int]) -> "PaletteSet":
        return PaletteSet([self.lists[e] for e in eids], universe=self.universe)

    def to_json(self) -> dict:
        return {"universe": list(self.universe), "lists": [list(q) for q in self.lists]}

    @classmethod
    def from_json(cls, doc) -> "PaletteSet":
        return cls(doc["lists"], doc.get("universe"))
