"""Low-outdegree orientation by reversing short directed paths inside clusters.

Starting from an arbitrary orientation, every overloaded vertex (outdegree
above ceil(a*(1 + eps))) sends one unit of outdegree along a directed path to a
vertex with spare capacity. Clusters of a network decomposition of G^{2R} do
this concurrently, one class at a time.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import MultiGraph
from .netdecomp import NetworkDecomposition, network_decomposition
from .oracles import pseudo_arboricity
from .runtime import RoundLedger, as_stream
from .structures import Orientation
from .util import check_eps, frac, log2n

K_RADIUS = 4


class NoSinkFoundError(RuntimeError):
    """No vertex with spare outdegree is reachable: the a* bound is too small."""


@dataclass(frozen=True)
class LoadThreshold:
    a_star_bound: int
    eps: Fraction

    @property
    def threshold(self) -> int:
        return math.ceil(self.a_star_bound * (1 + self.eps))

    def overloaded(self, outdeg: int) -> bool:
        return outdeg > self.threshold

    def has_room(self, outdeg: int) -> bool:
        # strictly below the real-valued a*(1 + eps)
        return outdeg < self.a_star_bound * (1 + self.eps)


def make_threshold(a_star_bound: int, eps) -> LoadThreshold:
    return LoadThreshold(int(a_star_bound), frac(eps))


def find_reversal_path(g: MultiGraph, psi: Orientation, v: int, th: LoadThreshold,
                       outdeg: list[int] | None = None) -> tuple[list[int], list[int]]:
    """BFS along directed edges from ``v`` to the nearest vertex with room.

    Returns (vertices, edges) of the path. Loops are never followed.
    """
    if outdeg is None:
        outdeg = psi.outdegrees()
    pred: dict[int, tuple[int, int]] = {v: (-1, -1)}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for e in g.incident(x):
            if psi.tail(e) != x:
                continue
            y = psi.head(e)
            if y == x or y in pred:
                continue
            pred[y] = (x, e)
            if th.has_room(outdeg[y]):
                verts, edges = [y], []
                while pred[verts[-1]][0] >= 0:
                    px, pe = pred[verts[-1]]
                    edges.append(pe)
                    verts.append(px)
                return verts[::-1], edges[::-1]
            queue.append(y)
    raise NoSinkFoundError(f"no vertex with spare outdegree reachable from {v}")


def reverse_path(psi: Orientation, edges: list[int], outdeg: list[int] | None = None) -> None:
    """Reverse a directed path in place; only its first and last vertex change outdegree."""
    if not edges:
        return
    first, last = psi.tail(edges[0]), psi.head(edges[-1])
    for e in edges:
        psi.reverse(e)
    if outdeg is not None:
        outdeg[first] -= 1
        outdeg[last] += 1


@dataclass
class PatchStats:
    reversals: int = 0
    longest_path: int = 0


def patch_orientation(g: MultiGraph, psi: Orientation, L, th: LoadThreshold,
                      ledger: RoundLedger | None = None, stats: PatchStats | None = None,
                      outdeg: list[int] | None = None) -> Orientation:
    """Return a copy of ``psi`` in which no vertex of ``L`` is overloaded."""
    psi = psi.copy()
    stats = stats if stats is not None else PatchStats()
    _patch_in_place(g, psi, sorted(set(L)), th, stats, outdeg if outdeg is not None else psi.outdegrees())
    if ledger is not None and stats.longest_path:
        ledger.charge("patch", stats.longest_path)
    return psi


def _patch_in_place(g, psi, order, th, stats, outdeg) -> None:
    for v in order:  # ascending index
        while th.overloaded(outdeg[v]):
            _, edges = find_reversal_path(g, psi, v, th, outdeg)
            reverse_path(psi, edges, outdeg)
            stats.reversals += 1
            stats.longest_path = max(stats.longest_path, len(edges))


@dataclass
class OrientationRun:
    orientation: Orientation
    threshold: LoadThreshold
    reversals: int
    longest_path: int
    R: int
    decomposition: NetworkDecomposition | None


def low_outdegree_orientation(g: MultiGraph, eps, stream=None, ledger: RoundLedger | None = None,
                              a_star: int | None = None, K: int = K_RADIUS) -> OrientationRun:
    """ceil(a*(1 + eps))-orientation; a* comes from the flow oracle unless supplied."""
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    e = check_eps(eps)
    if a_star is None:
        a_star = pseudo_arboricity(g)[0].value if g.m else 0
    th = make_threshold(a_star, e)
    psi = Orientation.toward_higher(g)
    if g.m == 0:
        return OrientationRun(psi, th, 0, 0, 0, None)
    R = math.ceil(K * log2n(g.n) / e)
    nd = network_decomposition(g, stream.derive("nd"), ledger, r=2 * R)
    outdeg = psi.outdegrees()
    stats = PatchStats()
    clusters = nd.clusters()
    for level, cids in enumerate(nd.clusters_by_class()):
        cost = 0
        for cid in cids:
            local = PatchStats()
            _patch_in_place(g, psi, clusters[cid], th, local, outdeg)
            if local.longest_path > R:
                raise NoSinkFoundError(f"reversal path of length {local.longest_path} left the radius-{R} ball")
            stats.reversals += local.reversals
            stats.longest_path = max(stats.longest_path, local.longest_path)
            # leader gathers N^R(C), computes, then broadcasts the changes
            cost = max(cost, 2 * (nd.weak_radius[cid] + R))
        ledger.charge(f"orient:class{level}", cost)
    return OrientationRun(psi, th, stats.reversals, stats.longest_path, R, nd)
