"""Chord diagrams: the cyclic boundary word of an arrangement.

Each line's extension meets the unit circle twice; sorting all 2k endpoints
by angle (exactly, through the quadratic sign machinery) and reading off the
owning labels yields a cyclic word in which every label appears twice.
"""

from __future__ import annotations

import functools

from .errors import LengthMismatch
from .lines import RealArrangement
from .quadratic import boundary_points, cmp_boundary_points

__all__ = [
    "ChordDiagram",
    "chord_diagram",
    "chord_diagrams_equivalent",
    "labels_interleave",
    "chord_separates",
]


class ChordDiagram:
    """Cyclic word over 1-based line labels; each label occurs exactly twice.

    Equality is cyclic-rotation equality (the word starts at an arbitrary
    boundary point); use :func:`chord_diagrams_equivalent` for the coarser
    relation that also allows reflection and relabeling.
    """

    __slots__ = ("word", "k")

    def __init__(self, word):
        word = tuple(word)
        if len(word) % 2:
            raise ValueError("chord word must have even length")
        k = len(word) // 2
        counts = {}
        for w in word:
            counts[w] = counts.get(w, 0) + 1
        if any(v != 2 for v in counts.values()) or len(counts) != k:
            raise ValueError("each label must appear exactly twice")
        self.word = word
        self.k = k

    def rotations(self):
        n = len(self.word)
        for r in range(n):
            yield self.word[r:] + self.word[:r]

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        if len(self.word) != len(other.word):
            return False
        return other.word in set(self.rotations())

    def __hash__(self):
        return hash(frozenset(self.rotations()))

    def __repr__(self):
        return "ChordDiagram(%s)" % " ".join(str(w) for w in self.word)


def chord_diagram(arr: RealArrangement) -> ChordDiagram:
    """Boundary word of the arrangement, labels 1..k, exact angular sort.

    The word starts at the endpoint with smallest angle in [0, 2*pi).
    """
    pts = []
    for idx, ln in enumerate(arr.lines):
        pts.extend(boundary_points(ln.a, ln.b, ln.c, line=idx + 1))
    pts.sort(key=functools.cmp_to_key(cmp_boundary_points))
    return ChordDiagram([p.line for p in pts])


def labels_interleave(d: ChordDiagram, a, b) -> bool:
    """True iff the two occurrences of a and of b alternate around the circle
    (equivalently: the chords cross inside the disk)."""
    pattern = [w for w in d.word if w in (a, b)]
    return pattern[0] == pattern[2]


def _canonical(word):
    """Lexicographically smallest representative over rotations, reflections
    and label bijections (labels renamed by first occurrence)."""
    n = len(word)
    best = None
    for base in (word, tuple(reversed(word))):
        for r in range(n):
            rot = base[r:] + base[:r]
            rename = {}
            out = []
            for w in rot:
                if w not in rename:
                    rename[w] = len(rename) + 1
                out.append(rename[w])
            out = tuple(out)
            if best is None or out < best:
                best = out
    return best


def chord_diagrams_equivalent(d1: ChordDiagram, d2: ChordDiagram) -> bool:
    """Ambient-isotopy classification of the partitioned boundary point sets:
    equality up to rotation, reflection and label bijection."""
    if len(d1.word) != len(d2.word):
        raise LengthMismatch(
            f"words have lengths {len(d1.word)} and {len(d2.word)}"
        )
    return _canonical(d1.word) == _canonical(d2.word)


def chord_separates(d: ChordDiagram, m, a, b) -> bool:
    """Does chord m separate chords a and b on the boundary circle?

    The two endpoints of m cut the circle into two open arcs; m separates a
    from b iff both endpoints of a lie in one arc and both endpoints of b lie
    in the other.  (If a or b interleaves with m, it straddles both arcs and
    is not separated from anything by m.)
    """
    word = d.word
    n = len(word)
    mi = [i for i, w in enumerate(word) if w == m]
    # Count occurrences of a and b per arc.
    occ = {a: [0, 0], b: [0, 0]}
    for i in range(mi[0] + 1, mi[1]):
        if word[i] in occ:
            occ[word[i]][0] += 1
    for i in range(mi[1] + 1, mi[0] + n):
        if word[i % n] in occ:
            occ[word[i % n]][1] += 1
    return (occ[a] == [2, 0] and occ[b] == [0, 2]) or (
        occ[a] == [0, 2] and occ[b] == [2, 0]
    )
