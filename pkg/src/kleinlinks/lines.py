"""Exact-rational lines in the Klein disk and arrangement combinatorics.

A hyperbolic line is the nonempty intersection of an affine line
{(x,y) : ax + by = c} with the open unit disk; the coefficients are kept
exactly and every planar predicate here is a sign computation on rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import (
    DuplicateLine,
    IdenticalLines,
    MissesDisk,
    ParallelPair,
)

__all__ = [
    "RealLine",
    "PairClass",
    "Node",
    "RealArrangement",
    "classify_pair",
    "validate_arrangement",
    "is_general_position",
    "connected_components",
    "is_connected",
    "is_essentially_affine",
]


def _frac(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"line coefficients must be exact rationals, got {type(x).__name__}")


class RealLine:
    """The affine line {ax + by = c}, canonicalized.

    Canonical form clears denominators, divides out the integer gcd and makes
    the first nonzero of (a, b) positive, so equal lines compare equal.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        a, b, c = _frac(a), _frac(b), _frac(c)
        if a == 0 and b == 0:
            raise ValueError("(a, b) must not both vanish")
        den = a.denominator * b.denominator * c.denominator
        ia = int(a * den)
        ib = int(b * den)
        ic = int(c * den)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        if g:
            ia, ib, ic = ia // g, ib // g, ic // g
        lead = ia if ia != 0 else ib
        if lead < 0:
            ia, ib, ic = -ia, -ib, -ic
        self.a, self.b, self.c = Fraction(ia), Fraction(ib), Fraction(ic)

    # -- exact geometry -----------------------------------------------------

    def norm2(self) -> Fraction:
        return self.a * self.a + self.b * self.b

    def dist2_origin(self) -> Fraction:
        """Squared distance from the origin to the affine line."""
        return self.c * self.c / self.norm2()

    def meets_disk(self) -> bool:
        return self.dist2_origin() < 1

    def eval_at(self, x: Fraction, y: Fraction) -> Fraction:
        return self.a * x + self.b * y - self.c

    def __eq__(self, other):
        if not isinstance(other, RealLine):
            return NotImplemented
        return (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return f"RealLine({self.a}, {self.b}, {self.c})"


class PairClass:
    """Classification of a line pair: their extensions meet inside the open
    disk (Concurrent, with the exact point), exactly on the unit circle
    (Parallel), or not in the closed disk (Hyperparallel, which also covers
    affinely parallel extensions)."""

    __slots__ = ("tag", "point")

    CONCURRENT = "Concurrent"
    PARALLEL = "Parallel"
    HYPERPARALLEL = "Hyperparallel"

    def __init__(self, tag, point=None):
        self.tag = tag
        self.point = point

    def is_concurrent(self):
        return self.tag == PairClass.CONCURRENT

    def is_parallel(self):
        return self.tag == PairClass.PARALLEL

    def is_hyperparallel(self):
        return self.tag == PairClass.HYPERPARALLEL

    def __eq__(self, other):
        if not isinstance(other, PairClass):
            return NotImplemented
        return self.tag == other.tag and self.point == other.point

    def __repr__(self):
        if self.point is not None:
            return f"PairClass({self.tag}, point=({self.point[0]}, {self.point[1]}))"
        return f"PairClass({self.tag})"


def _extension_intersection(l1: RealLine, l2: RealLine):
    """Exact affine intersection of the two extensions, or None if parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return (x, y)


def classify_pair(l1: RealLine, l2: RealLine) -> PairClass:
    """Exact pair classification; raises IdenticalLines on equal canonical forms."""
    if l1 == l2:
        raise IdenticalLines(f"{l1} given twice")
    pt = _extension_intersection(l1, l2)
    if pt is None:
        # Affinely parallel distinct extensions never meet the closed disk
        # together; the point payload stays None.
        return PairClass(PairClass.HYPERPARALLEL)
    n2 = pt[0] * pt[0] + pt[1] * pt[1]
    if n2 < 1:
        return PairClass(PairClass.CONCURRENT, pt)
    if n2 == 1:
        return PairClass(PairClass.PARALLEL, pt)
    return PairClass(PairClass.HYPERPARALLEL, pt)


class Node:
    """A point where m >= 2 arrangement lines meet inside the disk."""

    __slots__ = ("point", "incident")

    def __init__(self, point, incident):
        self.point = point
        self.incident = frozenset(incident)

    @property
    def degree(self):
        return len(self.incident)

    def __repr__(self):
        inc = ",".join(str(i) for i in sorted(self.incident))
        return f"Node(({self.point[0]}, {self.point[1]}), lines={{{inc}}})"


class RealArrangement:
    """A validated arrangement: pairwise distinct non-parallel chords.

    Carries the full symmetric pair-class table and the aggregated nodes.
    Construct through :func:`validate_arrangement`.
    """

    __slots__ = ("lines", "pair_classes", "nodes")

    def __init__(self, lines, pair_classes, nodes):
        self.lines = tuple(lines)
        self.pair_classes = pair_classes
        self.nodes = tuple(nodes)

    @property
    def k(self):
        return len(self.lines)

    @property
    def n_nodes(self):
        return len(self.nodes)

    def pair(self, i, j) -> PairClass:
        return self.pair_classes[(min(i, j), max(i, j))]

    def concurrent_pairs(self):
        return [
            (i, j)
            for (i, j), pc in sorted(self.pair_classes.items())
            if pc.is_concurrent()
        ]

    def node_degrees(self):
        return sorted((nd.degree for nd in self.nodes), reverse=True)

    def __repr__(self):
        return f"RealArrangement(k={self.k}, nodes={self.n_nodes})"


def validate_arrangement(lines) -> RealArrangement:
    """Classify all pairs, reject invalid input, aggregate nodes.

    Raises DuplicateLine, MissesDisk or ParallelPair (first offender in index
    order).
    """
    lines = [ln if isinstance(ln, RealLine) else RealLine(*ln) for ln in lines]
    if not lines:
        raise ValueError("arrangement needs at least one line")
    for i, ln in enumerate(lines):
        if not ln.meets_disk():
            raise MissesDisk(i)
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i] == lines[j]:
                raise DuplicateLine(i, j)
    pair_classes = {}
    by_point = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            pc = classify_pair(lines[i], lines[j])
            if pc.is_parallel():
                raise ParallelPair(i, j)
            pair_classes[(i, j)] = pc
            if pc.is_concurrent():
                by_point.setdefault(pc.point, set()).update((i, j))
    nodes = [Node(pt, inc) for pt, inc in by_point.items()]
    nodes.sort(key=lambda nd: (nd.point[0], nd.point[1]))
    return RealArrangement(lines, pair_classes, nodes)


def is_general_position(arr: RealArrangement) -> bool:
    """True iff every node has degree exactly 2 (vacuous for one line)."""
    return all(nd.degree == 2 for nd in arr.nodes)


def connected_components(arr: RealArrangement):
    """Partition of line indices under the concurrency relation.

    Two lines land in one part iff a path of concurrent pairs joins them;
    the union of chords is a connected point set iff there is one part.
    """
    parent = list(range(arr.k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), pc in arr.pair_classes.items():
        if pc.is_concurrent():
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(arr.k):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_connected(arr: RealArrangement) -> bool:
    return len(connected_components(arr)) == 1


def is_essentially_affine(arr: RealArrangement) -> bool:
    """True iff every existing extension intersection lies strictly inside the
    open unit disk (affinely parallel pairs impose no condition)."""
    return all(
        not (pc.is_hyperparallel() and pc.point is not None)
        for pc in arr.pair_classes.values()
    )
