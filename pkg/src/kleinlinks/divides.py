"""Divides from connected general-position arrangements.

The union of chords of such an arrangement, closed up in the disk, is a
divide: a properly immersed compact 1-manifold, transverse to the boundary
circle, connected, with finitely many ordinary double points.  Each chord is
one branch; its two endpoints sit on the boundary circle with quadratic-
irrational coordinates kept symbolically.

For a straight chord the tangent-vector construction
{x + i*u : x on the chord, u a tangent vector, |x|^2 + |u|^2 = 1}
coincides pointwise with the boundary circle of the complexified line:
writing the chord as foot + s*tau with unit direction tau and foot at
distance |c|/sqrt(N) from the origin, the constraint becomes
s^2 + v^2 = w^2 for u = v*tau, and (s, v) = w*(cos t, sin t) gives
foot + w*e^{it}*tau, which is exactly the complex-circle parametrization.
"""

from __future__ import annotations

import math

import numpy as np

from .circles import CircleParam, circle_at_infinity
from .complexline import complexify
from .errors import NotConnected, NotGeneralPosition
from .lines import RealArrangement, RealLine, is_connected, is_general_position
from .quadratic import boundary_points

__all__ = ["Divide", "divide_of", "acampo_link", "tangent_lift"]


class Divide:
    """Chords of a connected general-position arrangement, clipped to the disk.

    Attributes:
        segments: per branch, the pair of exact boundary points of the chord.
        double_points: the arrangement nodes (all ordinary, degree 2).
        branch_count: number of branches r (= number of lines).
        boundary_points: flat tuple of all 2r endpoint records.
        conditions: record of the four defining conditions, each verified.
    """

    __slots__ = ("arrangement", "segments", "double_points", "conditions")

    def __init__(self, arrangement, segments, double_points, conditions):
        self.arrangement = arrangement
        self.segments = tuple(segments)
        self.double_points = tuple(double_points)
        self.conditions = dict(conditions)

    @property
    def branch_count(self):
        return len(self.segments)

    @property
    def boundary_points(self):
        return tuple(p for seg in self.segments for p in seg)

    def __repr__(self):
        return (
            f"Divide(r={self.branch_count}, double_points={len(self.double_points)})"
        )


def divide_of(arr: RealArrangement) -> Divide:
    """Close up the chord union of a connected general-position arrangement.

    Raises NotConnected / NotGeneralPosition otherwise; records the four
    divide conditions (properness, boundary transversality, connectedness,
    ordinary double points), each individually checked.
    """
    if not is_general_position(arr):
        raise NotGeneralPosition("divide requires only ordinary double points")
    if not is_connected(arr):
        raise NotConnected("divide requires a connected chord union")
    segments = []
    for idx, ln in enumerate(arr.lines):
        p_minus, p_plus = boundary_points(ln.a, ln.b, ln.c, idx)
        segments.append((p_minus, p_plus))
    conditions = {
        # Endpoints on the circle, interior in the open disk: each chord is a
        # proper embedded arc because its extension meets the disk.
        "proper_immersion": all(ln.meets_disk() for ln in arr.lines),
        # A chord is tangent to the circle iff its distance to 0 equals 1,
        # excluded strictly by the same inequality.
        "boundary_transverse": all(ln.dist2_origin() < 1 for ln in arr.lines),
        "connected": is_connected(arr),
        # Degree-2 nodes of distinct straight lines are transverse crossings.
        "ordinary_double_points": all(nd.degree == 2 for nd in arr.nodes),
    }
    if not all(conditions.values()):
        failed = [k for k, v in conditions.items() if not v]
        raise NotGeneralPosition(f"divide conditions failed: {failed}")
    return Divide(arr, segments, arr.nodes, conditions)


def acampo_link(d: Divide, arr: RealArrangement) -> list[CircleParam]:
    """The link of the divide: one boundary circle per branch.

    For straight chords the tangent-vector construction and the circles of
    the complexified lines are the same point sets with the same
    parametrization (see module docstring and :func:`tangent_lift`), so the
    link is returned directly in circle form.
    """
    if d.branch_count != arr.k:
        raise ValueError(
            f"divide has {d.branch_count} branches but arrangement has {arr.k} lines"
        )
    return [circle_at_infinity(complexify(ln)) for ln in arr.lines]


def tangent_lift(line: RealLine, thetas) -> np.ndarray:
    """Evaluate the tangent-vector construction on a chord, shape (2, n).

    Points x(s) = foot + s*tau on the extension, tangent vectors u = v*tau,
    restricted to |x|^2 + |u|^2 = 1 and parametrized by
    (s, v) = w*(cos theta, sin theta).  Each sample is x + i*u read as a
    point of C^2 coordinatewise.
    """
    thetas = np.asarray(thetas, dtype=float)
    a, b, c = float(line.a), float(line.b), float(line.c)
    n = a * a + b * b
    rn = math.sqrt(n)
    foot = np.array([a * c / n, b * c / n])
    tau = np.array([-b / rn, a / rn])
    w = math.sqrt(1.0 - c * c / n)
    s = w * np.cos(thetas)
    v = w * np.sin(thetas)
    x = foot[:, None] + s[None, :] * tau[:, None]
    u = v[None, :] * tau[:, None]
    return x + 1j * u
