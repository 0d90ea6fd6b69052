"""Exact sign tests in real quadratic extensions of the rationals.

The boundary endpoints of a chord {ax+by=c} on the unit circle have
coordinates of the form (u + v*sqrt(D))/N with rational u, v and D, N derived
from (a,b,c).  Everything the angular machinery needs reduces to the sign of

    p + q*sqrt(d)                       (one radical), or
    A + B*sqrt(d1) + C*sqrt(d2) + E*sqrt(d1*d2)   (two radicals),

decided with integer arithmetic only: compare squares, tracking which side is
known positive.  No floating point anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "sign_rational",
    "sign_quad",
    "sign_biquad",
    "BoundaryPoint",
    "boundary_points",
    "angle_halfplane",
    "cmp_boundary_points",
]


def sign_rational(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_quad(p: Fraction, q: Fraction, d: Fraction) -> int:
    """Exact sign of p + q*sqrt(d) for rational p, q and rational d >= 0."""
    if d < 0:
        raise ValueError("radicand must be nonnegative")
    if d == 0 or q == 0:
        return sign_rational(p)
    if p == 0:
        return sign_rational(q)
    sp, sq = sign_rational(p), sign_rational(q)
    if sp == sq:
        return sp
    # Opposite signs: |p| vs |q|*sqrt(d) decides; compare squares.
    w = p * p - q * q * d
    return sign_rational(w) if sp > 0 else -sign_rational(w)


def sign_biquad(A: Fraction, B: Fraction, C: Fraction, E: Fraction,
                d1: Fraction, d2: Fraction) -> int:
    """Exact sign of A + B*sqrt(d1) + C*sqrt(d2) + E*sqrt(d1*d2), d1,d2 >= 0.

    Written as u + v*sqrt(d2) with u = A + B*sqrt(d1), v = C + E*sqrt(d1);
    the mixed comparison squares out through w = u^2 - v^2*d2, an element of
    Q(sqrt(d1)) again.
    """
    if d1 == d2:
        # Same field: collapses to a single radical.
        return sign_quad(A + E * d1, B + C, d1)
    if d2 == 0:
        return sign_quad(A, B, d1)
    if d1 == 0:
        return sign_quad(A, C, d2)
    su = sign_quad(A, B, d1)
    sv = sign_quad(C, E, d1)
    if sv == 0:
        return su
    if su == 0:
        return sv
    if su == sv:
        return su
    # u and v*sqrt(d2) compete with opposite signs; square them in Q(sqrt(d1)):
    # u^2 = (A^2 + B^2 d1) + 2AB sqrt(d1);  v^2 = (C^2 + E^2 d1) + 2CE sqrt(d1)
    wp = A * A + B * B * d1 - (C * C + E * E * d1) * d2
    wq = 2 * A * B - 2 * C * E * d2
    sw = sign_quad(wp, wq, d1)
    return sw if su > 0 else -sw


class BoundaryPoint:
    """One endpoint of a chord on the unit circle, stored exactly.

    Coordinates are x = (xu + xv*sqrt(D))/N, y = (yu + yv*sqrt(D))/N with
    N > 0, so signs of coordinates ignore N.  ``line`` is the owning line's
    index in an arrangement (bookkeeping only).
    """

    __slots__ = ("xu", "xv", "yu", "yv", "D", "N", "line")

    def __init__(self, xu, xv, yu, yv, D, N, line=None):
        self.xu, self.xv, self.yu, self.yv = xu, xv, yu, yv
        self.D, self.N = D, N
        self.line = line

    def sign_x(self) -> int:
        return sign_quad(self.xu, self.xv, self.D)

    def sign_y(self) -> int:
        return sign_quad(self.yu, self.yv, self.D)

    def floats(self):
        import math

        r = math.sqrt(float(self.D))
        n = float(self.N)
        return (
            (float(self.xu) + float(self.xv) * r) / n,
            (float(self.yu) + float(self.yv) * r) / n,
        )

    def __repr__(self):
        return (f"BoundaryPoint(({self.xu}+{self.xv}*sqrt({self.D}))/{self.N}, "
                f"({self.yu}+{self.yv}*sqrt({self.D}))/{self.N}, line={self.line})")


def boundary_points(a: Fraction, b: Fraction, c: Fraction, line=None):
    """The two intersection points of {ax+by=c} with the unit circle.

    With N = a^2+b^2 and D = N - c^2 > 0 (the line meets the open disk):

        X_pm = ( (a*c -/+ b*sqrt(D))/N , (b*c +/- a*sqrt(D))/N )

    Returned in the fixed order (minus-branch, plus-branch) of the formula;
    callers sort by angle themselves.
    """
    N = a * a + b * b
    D = N - c * c
    if D <= 0:
        raise ValueError("chord does not meet the open unit disk")
    p_minus = BoundaryPoint(a * c, -b, b * c, a, D, N, line)
    p_plus = BoundaryPoint(a * c, b, b * c, -a, D, N, line)
    return p_minus, p_plus


def angle_halfplane(p: BoundaryPoint) -> int:
    """0 when the angle lies in [0, pi), 1 when in [pi, 2*pi).

    Exact: y > 0, or y = 0 with x > 0, is the upper class.
    """
    sy = p.sign_y()
    if sy > 0:
        return 0
    if sy < 0:
        return 1
    return 0 if p.sign_x() > 0 else 1


def _cross_sign(p: BoundaryPoint, q: BoundaryPoint) -> int:
    """Exact sign of the planar cross product x_p*y_q - y_p*x_q.

    Expanding ((xu1+xv1 r1)(yu2+yv2 r2) - (yu1+yv1 r1)(xu2+xv2 r2)) with
    r_i = sqrt(D_i) gives the four biquadratic coefficients; the positive
    denominators N1*N2 cannot change the sign.
    """
    A = p.xu * q.yu - p.yu * q.xu
    B = p.xv * q.yu - p.yv * q.xu
    C = p.xu * q.yv - p.yu * q.xv
    E = p.xv * q.yv - p.yv * q.xv
    return sign_biquad(A, B, C, E, p.D, q.D)


def cmp_boundary_points(p: BoundaryPoint, q: BoundaryPoint) -> int:
    """Total order by angle in [0, 2*pi); -1, 0, +1 comparator, exact."""
    hp, hq = angle_halfplane(p), angle_halfplane(q)
    if hp != hq:
        return -1 if hp < hq else 1
    s = _cross_sign(p, q)
    # Within one half-plane (an arc shorter than pi), p precedes q exactly
    # when rotating p counterclockwise by less than pi reaches q.
    if s > 0:
        return -1
    if s < 0:
        return 1
    return 0
