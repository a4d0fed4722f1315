"""Ground-truth checkers and small exhaustive oracles.

Checkers are total: malformed input shows up as violations in the report,
never as an exception.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import MultiGraph
from .structures import Orientation, PaletteSet, PartialColoring


class CyclicColorClassError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


@dataclass
class ValidityReport:
    kind: str
    ok: bool = True
    violations: list[tuple[object, str]] = field(default_factory=list)
    metrics: dict[str, float] = field(default_factory=dict)

    def add(self, where, message: str) -> None:
        self.violations.append((where, message))
        self.ok = False

    def merge(self, other: "ValidityReport") -> "ValidityReport":
        for where, msg in other.violations:
            self.add(where, f"{other.kind}: {msg}")
        for k, v in other.metrics.items():
            self.metrics.setdefault(k, v)
        return self

    def to_json(self) -> dict:
        return {"kind": self.kind, "ok": self.ok,
                "violations": [[str(w), m] for w, m in self.violations], "metrics": dict(self.metrics)}


class _DSU:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent.setdefault(x, x)
        while p != x:
            self.parent[x] = self.parent.setdefault(p, p)
            x, p = p, self.parent[p]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _colors_of(g: MultiGraph, coloring, report: ValidityReport) -> list:
    colors = getattr(coloring, "colors", coloring)
    try:
        colors = list(colors)
    except TypeError:
        report.add("coloring", "not a sequence")
        return [None] * g.m
    if len(colors) != g.m:
        report.add("coloring", f"has {len(colors)} entries for {g.m} edges")
        colors = (colors + [None] * g.m)[: g.m]
    clean = []
    for e, c in enumerate(colors):
        if c is not None and (isinstance(c, bool) or not isinstance(c, int)):
            report.add(("edge", e), f"color {c!r} is not an integer")
            c = None
        clean.append(c)
    return clean


def _classes(colors: list) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for e, c in enumerate(colors):
        if c is not None:
            out.setdefault(c, []).append(e)
    return out


def check_forest_decomposition(g: MultiGraph, coloring, palettes: PaletteSet | None = None,
                               require_total: bool = True) -> ValidityReport:
    """Per-color union-find cycle detection plus palette membership."""
    report = ValidityReport("forest")
    colors = _colors_of(g, coloring, report)
    for c, edges in sorted(_classes(colors).items()):
        dsu = _DSU()
        for e in edges:
            u, v = g.edges[e]
            if not dsu.union(u, v):
                report.add(("color", c), f"edge {e} closes a cycle")
                break
    if require_total:
        missing = [e for e, c in enumerate(colors) if c is None]
        if missing:
            report.add(("edge", missing[0]), f"{len(missing)} edges uncolored")
    if palettes is not None:
        for e, c in enumerate(colors):
            if c is not None and (e >= len(palettes) or c not in palettes[e]):
                report.add(("edge", e), f"color {c} is not in its palette")
    report.metrics["colors"] = len({c for c in colors if c is not None})
    report.metrics["colored_edges"] = sum(c is not None for c in colors)
    return report


def check_star_forest(g: MultiGraph, coloring, palettes: PaletteSet | None = None,
                      require_total: bool = True) -> ValidityReport:
    """Every component of every color class is a tree with a vertex touching all its edges."""
    report = check_forest_decomposition(g, coloring, palettes, require_total)
    report.kind = "star"
    colors = _colors_of(g, coloring, ValidityReport("scratch"))
    for c, edges in sorted(_classes(colors).items()):
        for comp in _edge_components(g, edges):
            touching: dict[int, int] = {}
            for e in comp:
                for x in set(g.edges[e]):
                    touching[x] = touching.get(x, 0) + 1
            if not any(cnt == len(comp) for cnt in touching.values()):
                report.add(("color", c), f"component with edges {sorted(comp)[:4]} is not a star")
                break
    return report


def _edge_components(g: MultiGraph, edges: list[int]) -> list[list[int]]:
    by_vertex: dict[int, list[int]] = {}
    for e in edges:
        for x in set(g.edges[e]):
            by_vertex.setdefault(x, []).append(e)
    seen: set[int] = set()
    comps = []
    for e in edges:
        if e in seen:
            continue
        seen.add(e)
        comp, stack = [], [e]
        while stack:
            f = stack.pop()
            comp.append(f)
            for x in g.edges[f]:
                for h in by_vertex[x]:
                    if h not in seen:
                        seen.add(h)
                        stack.append(h)
        comps.append(comp)
    return comps


def _tree_diameter(adj: dict[int, list[int]], start: int) -> tuple[int, set[int]]:
    def farthest(src):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        far = max(dist, key=lambda v: (dist[v], -v))
        return far, dist

    a, dist = farthest(start)
    _, dist2 = farthest(a)
    return max(dist2.values()), set(dist)


def color_class_diameters(g: MultiGraph, coloring) -> dict[int, int]:
    """Largest tree diameter per color (two BFS sweeps per tree)."""
    colors = _colors_of(g, coloring, ValidityReport("scratch"))
    out = {}
    for c, edges in sorted(_classes(colors).items()):
        dsu = _DSU()
        adj: dict[int, list[int]] = {}
        for e in edges:
            u, v = g.edges[e]
            if not dsu.union(u, v):
                raise CyclicColorClassError(f"color {c} contains a cycle through edge {e}")
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        best, seen = 0, set()
        for x in sorted(adj):
            if x not in seen:
                d, comp = _tree_diameter(adj, x)
                seen |= comp
                best = max(best, d)
        out[c] = best
    return out


def max_diameter(g: MultiGraph, coloring) -> int:
    return max(color_class_diameters(g, coloring).values(), default=0)


def check_orientation(g: MultiGraph, psi: Orientation, k: int, require_acyclic: bool = False) -> ValidityReport:
    report = ValidityReport("orientation")
    try:
        outdeg = psi.outdegrees()
    except Exception as err:  # total checker
        report.add("orientation", f"unreadable: {err}")
        return report
    if len(outdeg) != g.n:
        report.add("orientation", "vertex count mismatch")
        return report
    for v, d in enumerate(outdeg):
        if d > k:
            report.add(("vertex", v), f"outdegree {d} exceeds {k}")
    report.metrics["max_outdegree"] = max(outdeg, default=0)
    if require_acyclic:
        acyclic = psi.is_acyclic()
        report.metrics["acyclic"] = int(acyclic)
        if not acyclic:
            report.add("orientation", "contains a directed cycle")
    return report


def check_leftover_witness(g: MultiGraph, charged_to: dict[int, int], bound: int) -> ValidityReport:
    """Every removed edge is charged to one of its endpoints and no vertex carries more than ``bound``."""
    report = ValidityReport("leftover")
    load: dict[int, int] = {}
    for e, v in charged_to.items():
        if v not in g.edges[e]:
            report.add(("edge", e), f"charged to non-endpoint {v}")
        load[v] = load.get(v, 0) + 1
    for v, cnt in sorted(load.items()):
        if cnt > bound:
            report.add(("vertex", v), f"carries {cnt} removed edges, bound {bound}")
    report.metrics["max_load"] = max(load.values(), default=0)
    return report


def exhaustive_min_diameter_fd(g: MultiGraph, k: int, budget: int = 10 ** 8) -> int | None:
    """Minimum over all k-forest decompositions of the largest tree diameter (None if no k-FD).

    Backtracking over edges with per-color union-find pruning; the first edge
    is fixed to color 0 and partial assignments whose diameter already reaches
    the best found are cut off.
    """
    if g.m == 0:
        return 0
    if k < 1:
        return None
    if k ** (g.m - 1) > budget:
        raise BudgetExceededError(f"{k}^{g.m - 1} colorings exceed the budget {budget}")
    colors: list[int | None] = [None] * g.m
    best = [None]
    visits = [0]
    order = sorted(range(g.m), key=lambda e: g.edges[e])

    def current_max() -> int:
        return max_diameter(g, PartialColoring(colors))

    def connected(c, u, v):
        adj: dict[int, list[int]] = {}
        for f, col in enumerate(colors):
            if col == c:
                a, b = g.edges[f]
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
        seen, stack = {u}, [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def rec(i: int, used: int) -> None:
        visits[0] += 1
        if visits[0] > budget:
            raise BudgetExceededError("search budget exhausted")
        if best[0] is not None and current_max() >= best[0]:
            return
        if i == len(order):
            best[0] = current_max()
            return
        e = order[i]
        u, v = g.edges[e]
        # colors beyond used + 1 are symmetric to used + 1
        for c in range(min(k, used + 1)):
            if connected(c, u, v):
                continue
            colors[e] = c
            rec(i + 1, max(used, c + 1))
            colors[e] = None

    rec(0, 0)
    return best[0]


def path_multigraph_color_bound(l: int, k: int, colors: int, d: int) -> bool:
    """The counting inequality for the path multigraph: colors * d * (1 + l/(d+1)) >= (l-1) k."""
    return colors * d * (1 + l / (d + 1)) >= (l - 1) * k
