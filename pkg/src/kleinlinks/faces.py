"""Bounded faces of an arrangement and the line dual graph.

``bounded_faces`` uses the closed count n - k + c.  The exact face-traversal
route (`face_traversal_bounded_faces`) builds the planar subdivision induced
by the chords — interior nodes plus boundary endpoints, rotation systems from
exact angular sorts — and counts the face walks that never touch the unit
circle.  It exists as an independent oracle and is kept callable from the
library so the test suite can pit the two against each other.
"""

from __future__ import annotations

import functools

from .errors import NotGeneralPosition
from .lines import RealArrangement, connected_components, is_general_position
from .quadratic import sign_rational

__all__ = [
    "bounded_faces",
    "face_traversal_bounded_faces",
    "DualGraph",
    "dual_graph",
]


def bounded_faces(arr: RealArrangement) -> int:
    """Number of complementary regions whose closure avoids the unit circle.

    For a general-position arrangement with n nodes, k lines and c connected
    components the count is n - k + c (an Euler-formula consequence; the
    traversal oracle below recounts it from scratch).
    """
    if not is_general_position(arr):
        raise NotGeneralPosition("bounded face count needs all nodes of degree 2")
    n = arr.n_nodes
    k = arr.k
    c = len(connected_components(arr))
    return n - k + c


# -- independent oracle ----------------------------------------------------


def _cmp_rational_dir(u, v):
    """Exact ccw angular comparator for nonzero rational direction vectors."""
    def half(w):
        sy = sign_rational(w[1])
        if sy > 0:
            return 0
        if sy < 0:
            return 1
        return 0 if sign_rational(w[0]) > 0 else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    s = sign_rational(u[0] * v[1] - u[1] * v[0])
    if s > 0:
        return -1
    if s < 0:
        return 1
    return 0


def face_traversal_bounded_faces(arr: RealArrangement) -> int:
    """Count bounded hyperbolic faces by explicit half-edge traversal.

    Vertices are the interior nodes (exact rational points) and the 2k chord
    endpoints (symbolic keys; no two valid lines share one).  Each chord
    contributes the segments between consecutive vertices along it.  Faces
    are orbits of the next-half-edge map; a face is hyperbolically bounded
    iff its walk never visits a circle endpoint.
    """
    if not is_general_position(arr):
        raise NotGeneralPosition("face traversal oracle needs general position")

    # Per line: interior nodes sorted by the rational chord parameter
    # t = -b*x + a*y; the two circle endpoints sit at t = -sqrt(D), +sqrt(D).
    node_key = {}
    for nd in arr.nodes:
        node_key[nd.point] = ("n", nd.point)

    edges = []          # (ukey, vkey, udir, vdir): outgoing directions, rational
    for idx, ln in enumerate(arr.lines):
        tau = (-ln.b, ln.a)
        on_line = [nd.point for nd in arr.nodes if idx in _incident_set(arr, nd)]
        on_line.sort(key=lambda p: -ln.b * p[0] + ln.a * p[1])
        chain = [("b", idx, 0)] + [node_key[p] for p in on_line] + [("b", idx, 1)]
        for u, v in zip(chain, chain[1:]):
            edges.append((u, v, tau, (-tau[0], -tau[1])))

    # Rotation system: ccw-sorted outgoing half-edges per vertex.
    out = {}
    half_edges = []
    for eid, (u, v, du, dv) in enumerate(edges):
        half_edges.append((u, v, du, eid))
        half_edges.append((v, u, dv, eid))
    for h in half_edges:
        out.setdefault(h[0], []).append(h)
    for vkey, lst in out.items():
        lst.sort(key=functools.cmp_to_key(lambda p, q: _cmp_rational_dir(p[2], q[2])))

    index_at = {}
    for vkey, lst in out.items():
        for pos, h in enumerate(lst):
            index_at[(h[0], h[1], h[3])] = pos

    def next_half(h):
        u, v, _, eid = h
        lst = out[v]
        back_pos = index_at[(v, u, eid)]
        return lst[(back_pos - 1) % len(lst)]

    seen = set()
    bounded = 0
    for h in half_edges:
        key = (h[0], h[1], h[3])
        if key in seen:
            continue
        walk = []
        cur = h
        while True:
            ck = (cur[0], cur[1], cur[3])
            if ck in seen:
                break
            seen.add(ck)
            walk.append(cur)
            cur = next_half(cur)
        touches_circle = any(w[0][0] == "b" for w in walk)
        if not touches_circle:
            bounded += 1
    return bounded


def _incident_set(arr, nd):
    return nd.incident


class DualGraph:
    """Graph with one vertex per line and one edge per (degree-2) node."""

    __slots__ = ("k", "edges")

    def __init__(self, k, edges):
        self.k = k
        self.edges = tuple(sorted(tuple(sorted(e)) for e in edges))

    @property
    def is_line_tree(self):
        if len(self.edges) != self.k - 1:
            return False
        parent = list(range(self.k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        return len({find(i) for i in range(self.k)}) == 1

    def degree_sequence(self):
        deg = [0] * self.k
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def __repr__(self):
        return f"DualGraph(k={self.k}, edges={list(self.edges)})"


def dual_graph(arr: RealArrangement) -> DualGraph:
    """One vertex per line, one edge per node (general position required)."""
    if not is_general_position(arr):
        raise NotGeneralPosition("dual graph is defined for general position")
    edges = []
    for nd in arr.nodes:
        inc = sorted(nd.incident)
        edges.append((inc[0], inc[1]))
    return DualGraph(arr.k, edges)
