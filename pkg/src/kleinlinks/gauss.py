"""Gauss linking numbers of closed polylines in R^3.

The solid-angle formula per segment quadrilateral is exact for polygons, so
a coarse polyline gives the same integer as a fine one as long as the two
polylines are disjoint and isotopic to the intended curves.  Summation is
sequential (no parallel reduction) so results are bit-reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ToleranceViolation

__all__ = ["linking_number", "linking_number_int"]

try:  # pragma: no cover - exercised whenever numba is installed
    from numba import jit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _linking_core_py(ls, ks):
    lam = 0.0
    for i in range(ks.shape[0] - 1):
        for j in range(ls.shape[0] - 1):
            a = ls[j, :] - ks[i, :]
            b = ls[j, :] - ks[i + 1, :]
            c = ls[j + 1, :] - ks[i + 1, :]
            d = ls[j + 1, :] - ks[i, :]
            p = (
                a[0] * (b[1] * c[2] - b[2] * c[1])
                + a[1] * (b[2] * c[0] - b[0] * c[2])
                + a[2] * (b[0] * c[1] - b[1] * c[0])
            )
            an = math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])
            bn = math.sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2])
            cn = math.sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2])
            dn = math.sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2])
            ab = a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
            bc = b[0] * c[0] + b[1] * c[1] + b[2] * c[2]
            ca = c[0] * a[0] + c[1] * a[1] + c[2] * a[2]
            ad = a[0] * d[0] + a[1] * d[1] + a[2] * d[2]
            dc = d[0] * c[0] + d[1] * c[1] + d[2] * c[2]
            d1 = an * bn * cn + ab * cn + bc * an + ca * bn
            d2 = an * dn * cn + ad * cn + dc * an + ca * dn
            lam += math.atan2(p, d1) + math.atan2(p, d2)
    return lam / (2.0 * math.pi)


if _HAVE_NUMBA:
    _linking_core = jit(nopython=True, cache=True)(_linking_core_py)
else:
    _linking_core = _linking_core_py


def _closed(points) -> np.ndarray:
    pts = np.ascontiguousarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError("polyline must have shape (n, 3)")
    if pts.shape[0] < 3:
        raise ValueError("polyline needs at least 3 points")
    if not np.array_equal(pts[0], pts[-1]):
        pts = np.vstack((pts, pts[0:1]))
    return pts


def linking_number(curve1, curve2) -> float:
    """Raw Gauss linking number of two closed polylines (open input closed up)."""
    return float(_linking_core(_closed(curve1), _closed(curve2)))


def linking_number_int(curve1, curve2, tol: float = 0.1) -> int:
    """Linking number rounded to the nearest integer.

    The polygon formula is exact up to roundoff, so a large residual means
    the polylines intersect or were corrupted; that raises rather than
    rounding silently.
    """
    raw = linking_number(curve1, curve2)
    nearest = round(raw)
    if abs(raw - nearest) > tol:
        raise ToleranceViolation(
            f"linking number {raw} is not within {tol} of an integer"
        )
    return int(nearest)
