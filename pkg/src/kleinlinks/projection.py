"""Link diagrams from curves on the 3-sphere.

Chart: stereographic projection from the pole (0, -i),
(z, w) |-> (z, Re w) / (1 + Im w), read as a complex plane coordinate
zeta = z/(1 + Im w) and a real height h = Re w/(1 + Im w).  The diagram
plane is (Re zeta, h); Im zeta is the depth, larger depth in front.

Crossing detection samples each curve at N points, finds candidate plane
intersections among segment pairs, and refines each candidate by bisection
on the two angle parameters until the plane gap is below 1e-12.  A diagram
is accepted only when every genericity gate passes (pole clearance,
non-degenerate plane image, transverse tangents at crossings, depth gaps
above `tol`, no near-coincident crossing positions).  On failure the whole
configuration is rotated by a seeded SU(2) unitary and reprojected; the
link type is unchanged because unitaries preserve the sphere.
"""

from __future__ import annotations

import math
import random

import numpy as np

from .errors import GenericityFailure, OddCrossingParity, ToleranceViolation

__all__ = [
    "POLE",
    "RotatedCurve",
    "Crossing",
    "LinkDiagram",
    "project_diagram",
    "diagram_linking_matrix",
    "stereographic",
    "su2_from_quaternion",
    "seeded_unitary",
]

POLE = np.array([0.0, -1.0j])

_N_SAMPLES = 512
_MAX_ATTEMPTS = 12
_POLE_CLEARANCE2 = 1e-2  # min squared distance from any curve to the pole
_PLANE_GAP = 1e-12  # refinement target for |plane_i - plane_j| at a crossing
_TRANSVERSALITY = 1e-6  # min |sin angle| between plane tangents at a crossing
_FLATNESS = 1e-2  # min relative thickness of a curve's plane image
# Crossing sign: +1 when (over tangent, under tangent) is a positively
# oriented plane frame.  The chart fixes the global mirror so that two
# fibers through the origin cross positively, matching the canonical
# complex orientation of their circles; the constant below locks that in.
_SIGN_FLIP = 1


def stereographic(points: np.ndarray):
    """Map (2, n) complex sphere points to plane (n, 2) and depth (n,).

    zeta = z/(1 + Im w), h = Re w/(1 + Im w); plane = (Re zeta, h),
    depth = Im zeta.
    """
    z, w = points[0], points[1]
    den = 1.0 + np.imag(w)
    zeta = z / den
    h = np.real(w) / den
    plane = np.stack((np.real(zeta), h), axis=-1)
    return plane, np.imag(zeta)


def su2_from_quaternion(q) -> np.ndarray:
    """Unit quaternion (q0, q1, q2, q3) -> SU(2) matrix."""
    q0, q1, q2, q3 = q
    a = q0 + 1j * q1
    b = q2 + 1j * q3
    return np.array([[a, b], [-np.conj(b), np.conj(a)]])


def seeded_unitary(seed: int, attempt: int) -> np.ndarray:
    """Deterministic near-identity SU(2) element, drifting with the attempt."""
    rng = random.Random(f"projection:{seed}:{attempt}")
    v = [rng.gauss(0.0, 1.0) for _ in range(3)]
    nv = math.sqrt(sum(x * x for x in v)) or 1.0
    eps = 0.15 * (1.0 + 0.5 * (attempt - 1))
    q = [1.0] + [eps * x / nv for x in v]
    nq = math.sqrt(sum(x * x for x in q))
    return su2_from_quaternion([x / nq for x in q])


class RotatedCurve:
    """A curve composed with a fixed unitary of C^2; same protocol."""

    __slots__ = ("base", "unitary")

    def __init__(self, base, unitary: np.ndarray):
        self.base = base
        self.unitary = unitary

    @property
    def theta_max(self) -> float:
        return self.base.theta_max

    @property
    def is_round_circle(self) -> bool:
        return bool(getattr(self.base, "is_round_circle", False))

    def eval(self, thetas) -> np.ndarray:
        return self.unitary @ self.base.eval(thetas)

    def vel(self, thetas) -> np.ndarray:
        return self.unitary @ self.base.vel(thetas)

    def eval_scalar(self, theta: float):
        z, w = _eval_scalar(self.base, theta)
        u = self.unitary
        return u[0, 0] * z + u[0, 1] * w, u[1, 0] * z + u[1, 1] * w

    def vel_scalar(self, theta: float):
        z, w = _vel_scalar(self.base, theta)
        u = self.unitary
        return u[0, 0] * z + u[0, 1] * w, u[1, 0] * z + u[1, 1] * w

    def min_dist2_to(self, p) -> float:
        inner = getattr(self.base, "min_dist2_to", None)
        if inner is not None:
            # |U x - p| = |x - U* p| for unitary U.
            return inner(self.unitary.conj().T @ np.asarray(p, dtype=complex))
        raise AttributeError("base curve has no closed-form distance")


def _eval_scalar(curve, theta: float):
    f = getattr(curve, "eval_scalar", None)
    if f is not None:
        return f(theta)
    pts = curve.eval(np.array([theta]))
    return complex(pts[0, 0]), complex(pts[1, 0])


def _vel_scalar(curve, theta: float):
    f = getattr(curve, "vel_scalar", None)
    if f is not None:
        return f(theta)
    vels = curve.vel(np.array([theta]))
    return complex(vels[0, 0]), complex(vels[1, 0])


def _stereo_scalar(z: complex, w: complex):
    """Plane (px, py) and depth of one sphere point."""
    den = 1.0 + w.imag
    return z.real / den, w.real / den, z.imag / den


def _min_dist2_to_pole(curve) -> float:
    closed_form = getattr(curve, "min_dist2_to", None)
    if closed_form is not None:
        try:
            return float(closed_form(POLE))
        except AttributeError:
            pass
    thetas = np.arange(4096) * (curve.theta_max / 4096)
    pts = curve.eval(thetas)
    d = pts - POLE[:, None]
    return float(np.min(np.sum(np.abs(d) ** 2, axis=0)))


class Crossing:
    """One transverse double point of the plane diagram.

    `ci`/`cj` are component indices with (ci, ti) the strand listed first;
    `over` is 0 when that strand has the larger depth, else 1.
    """

    __slots__ = (
        "ci", "cj", "ti", "tj", "pos", "sign", "over",
        "depth_i", "depth_j", "tan_i", "tan_j",
    )

    def __init__(self, ci, cj, ti, tj, pos, sign, over, depth_i, depth_j, tan_i, tan_j):
        self.ci = ci
        self.cj = cj
        self.ti = ti
        self.tj = tj
        self.pos = pos
        self.sign = sign
        self.over = over
        self.depth_i = depth_i
        self.depth_j = depth_j
        self.tan_i = tan_i
        self.tan_j = tan_j

    @property
    def over_component(self):
        return self.ci if self.over == 0 else self.cj

    @property
    def under_component(self):
        return self.cj if self.over == 0 else self.ci

    def involves(self, a, b):
        return {self.ci, self.cj} == {a, b}

    def __repr__(self):
        return (
            f"Crossing(c{self.ci}@{self.ti:.6f} x c{self.cj}@{self.tj:.6f}, "
            f"sign={self.sign:+d}, over={'ij'[self.over]})"
        )


class LinkDiagram:
    """A generic plane diagram of a link, with sampled geometry attached.

    Components keep their curve objects (already rotated into the generic
    frame), the sample grid, plane polylines and depths; crossings carry
    refined angles, signs and over/under assignments, sorted canonically by
    (ci, cj, ti, tj) so all downstream output is deterministic.
    """

    __slots__ = ("curves", "thetas", "plane", "depth", "crossings", "seed", "attempt", "unitary", "tol")

    def __init__(self, curves, thetas, plane, depth, crossings, seed, attempt, unitary, tol):
        self.curves = list(curves)
        self.thetas = list(thetas)
        self.plane = list(plane)
        self.depth = list(depth)
        self.crossings = sorted(crossings, key=lambda x: (x.ci, x.cj, x.ti, x.tj))
        self.seed = seed
        self.attempt = attempt
        self.unitary = unitary
        self.tol = tol

    @property
    def n_components(self) -> int:
        return len(self.curves)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def component_crossings(self, i, j):
        return [x for x in self.crossings if x.involves(i, j)]

    def self_crossings(self, i):
        return [x for x in self.crossings if x.ci == i and x.cj == i]

    # -- passage bookkeeping (shared by PD, Gauss code and Seifert stage) ----

    def passages(self, comp: int):
        """Crossing passages of one component, sorted by angle.

        Each entry is (theta, crossing index, strand role 0/1).
        """
        out = []
        for idx, x in enumerate(self.crossings):
            if x.ci == comp:
                out.append((x.ti, idx, 0))
            if x.cj == comp:
                out.append((x.tj, idx, 1))
        out.sort()
        return out

    def _arc_labels(self):
        """Global arc numbering 1..2c along components, PD convention.

        Arc m of a component runs from its m-th passage to the next one
        (cyclically), so outgoing(p_m) = base+m and incoming(p_m) =
        base+(m-1 mod P).  Returns maps keyed by (crossing index, role).
        """
        arcs_in = {}
        arcs_out = {}
        base = 1
        for comp in range(self.n_components):
            ps = self.passages(comp)
            n = len(ps)
            for m, (_, idx, role) in enumerate(ps):
                arcs_out[(idx, role)] = base + m
                arcs_in[(idx, role)] = base + (m - 1) % n
            base += n
        return arcs_in, arcs_out

    def pd_code(self):
        """PD tuples X[a,b,c,d]: counterclockwise from the incoming under-arc."""
        arcs_in, arcs_out = self._arc_labels()
        code = []
        for idx, x in enumerate(self.crossings):
            over_role = x.over
            under_role = 1 - x.over
            a = arcs_in[(idx, under_role)]
            c = arcs_out[(idx, under_role)]
            e = arcs_in[(idx, over_role)]
            f = arcs_out[(idx, over_role)]
            if x.sign > 0:
                code.append((a, f, c, e))
            else:
                code.append((a, e, c, f))
        return code

    def pd_text(self) -> str:
        return "\n".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in self.pd_code())

    def gauss_code(self) -> str:
        """One line per component: O/U tokens with crossing label and sign."""
        lines = []
        for comp in range(self.n_components):
            tokens = []
            for _, idx, role in self.passages(comp):
                x = self.crossings[idx]
                kind = "O" if role == x.over else "U"
                tokens.append(f"{kind}{idx + 1}{'+' if x.sign > 0 else '-'}")
            lines.append(" ".join(tokens))
        return "\n".join(lines)

    def __repr__(self):
        return (
            f"LinkDiagram(components={self.n_components}, "
            f"crossings={self.crossing_count}, attempt={self.attempt})"
        )


class _Reject(Exception):
    """One projection attempt failed a genericity gate."""

    def __init__(self, reason, kind):
        super().__init__(reason)
        self.kind = kind  # "pole" | "flat" | "depth" | "tangency" | "separation"


def _cross2(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _segment_candidates(p_arr, q_arr, same):
    """Index pairs (m, m') whose closed-polyline segments may intersect."""
    pa = p_arr
    pb = np.roll(p_arr, -1, axis=0)
    qa = q_arr
    qb = np.roll(q_arr, -1, axis=0)
    r = (pb - pa)[:, None, :]
    s = (qb - qa)[None, :, :]
    pq = qa[None, :, :] - pa[:, None, :]
    d1 = _cross2(r, pq)
    d2 = _cross2(r, qb[None, :, :] - pa[:, None, :])
    d3 = _cross2(s, -pq)
    d4 = _cross2(s, pb[:, None, :] - qa[None, :, :])
    scale = max(
        float(np.max(np.abs(r))) if r.size else 1.0,
        float(np.max(np.abs(s))) if s.size else 1.0,
        1e-30,
    )
    slack = (scale * scale) * 1e-13
    hits = (d1 * d2 <= slack) & (d3 * d4 <= slack)
    if same:
        n = p_arr.shape[0]
        idx = np.arange(n)
        diff = np.abs(idx[:, None] - idx[None, :])
        adjacent = np.minimum(diff, n - diff) <= 1
        hits &= ~adjacent
        hits &= idx[:, None] < idx[None, :]
    return np.argwhere(hits)


def _chord_gaps(ax, ay, bx, by, cx, cy, dx, dy):
    """Orientation products for chords (a,b) and (c,d), plus a slack level."""
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    d1 = rx * (cy - ay) - ry * (cx - ax)
    d2 = rx * (dy - ay) - ry * (dx - ax)
    d3 = sx * (ay - cy) - sy * (ax - cx)
    d4 = sx * (by - cy) - sy * (bx - cx)
    scale = max(abs(rx), abs(ry), abs(sx), abs(sy), 1e-300)
    return d1 * d2, d3 * d4, (scale * scale) * 1e-13


def _plane_scalar(curve, theta: float):
    z, w = _eval_scalar(curve, theta)
    px, py, _ = _stereo_scalar(z, w)
    return px, py


def _refine_crossing(curve_i, curve_j, i_lo, i_hi, j_lo, j_hi):
    """Bisection on both angle intervals; returns roots (theta_i, theta_j).

    Splits each interval in half and descends into every quadrant whose
    plane chords still intersect.  Strict intersection is preferred; the
    slack test only fires when a root sits on a subdivision boundary, where
    all descendants converge to the same point and are deduplicated by the
    caller.  A work budget caps pathological tangencies.
    """
    roots = []
    pops = 0
    p_lo = _plane_scalar(curve_i, i_lo)
    p_hi = _plane_scalar(curve_i, i_hi)
    q_lo = _plane_scalar(curve_j, j_lo)
    q_hi = _plane_scalar(curve_j, j_hi)
    stack = [(i_lo, i_hi, j_lo, j_hi, p_lo, p_hi, q_lo, q_hi, 0)]
    while stack and pops < 2000:
        pops += 1
        a, b, c, d, pa, pb, qa, qb, depth = stack.pop()
        if depth >= 48:
            roots.append((0.5 * (a + b), 0.5 * (c + d)))
            continue
        im = 0.5 * (a + b)
        jm = 0.5 * (c + d)
        pm = _plane_scalar(curve_i, im)
        qm = _plane_scalar(curve_j, jm)
        quads = []
        for (ia, ib, ra, rb) in ((a, im, pa, pm), (im, b, pm, pb)):
            for (jc, jd, sa, sb) in ((c, jm, qa, qm), (jm, d, qm, qb)):
                g1, g2, slack = _chord_gaps(
                    ra[0], ra[1], rb[0], rb[1], sa[0], sa[1], sb[0], sb[1]
                )
                quads.append(((ia, ib, jc, jd, ra, rb, sa, sb, depth + 1), g1, g2, slack))
        strict = [q for q in quads if q[1] < 0 and q[2] < 0]
        if strict:
            hits = strict
        else:
            # Boundary-of-cell root: every slack hit converges to the same
            # point, so one representative suffices (and stays linear).
            hits = [q for q in quads if q[1] <= q[3] and q[2] <= q[3]][:1]
        if hits:
            for entry, _, _, _ in hits:
                stack.append(entry)
        elif depth < 8:
            # Numerical corner: descend toward the closest quadrant once.
            best = None
            for entry, _, _, _ in quads:
                ra, rb, sa, sb = entry[4], entry[5], entry[6], entry[7]
                gap = min(
                    (ra[0] - sa[0]) ** 2 + (ra[1] - sa[1]) ** 2,
                    (ra[0] - sb[0]) ** 2 + (ra[1] - sb[1]) ** 2,
                    (rb[0] - sa[0]) ** 2 + (rb[1] - sa[1]) ** 2,
                    (rb[0] - sb[0]) ** 2 + (rb[1] - sb[1]) ** 2,
                )
                if best is None or gap < best[0]:
                    best = (gap, entry)
            stack.append(best[1])
    return roots


def _tangent_and_depth(curve, theta):
    z, w = _eval_scalar(curve, theta)
    dz, dw = _vel_scalar(curve, theta)
    den = 1.0 + w.imag
    dden = dw.imag
    zeta = z / den
    dzeta = (dz * den - z * dden) / (den * den)
    dh = (dw.real * den - w.real * dden) / (den * den)
    plane = np.array([zeta.real, w.real / den])
    tangent = np.array([dzeta.real, dh])
    return plane, tangent, zeta.imag


def _attempt_projection(curves, seed, attempt, unitary, tol):
    rotated = [RotatedCurve(c, unitary) for c in curves]
    for c in rotated:
        if _min_dist2_to_pole(c) < _POLE_CLEARANCE2:
            raise _Reject("curve too close to projection pole", "pole")
    thetas = []
    plane = []
    depth = []
    for c in rotated:
        th = np.arange(_N_SAMPLES) * (c.theta_max / _N_SAMPLES)
        pl, dp = stereographic(c.eval(th))
        thetas.append(th)
        plane.append(pl)
        depth.append(dp)
        centered = pl - np.mean(pl, axis=0)
        sv = np.linalg.svd(centered, compute_uv=False)
        if sv[-1] < _FLATNESS * max(sv[0], 1e-30):
            raise _Reject("plane image degenerate (segment-like)", "flat")
    scale = max(float(np.max(np.abs(np.vstack(plane)))), 1.0)

    crossings = []
    m = len(rotated)
    for i in range(m):
        for j in range(i, m):
            same = i == j
            cand = _segment_candidates(plane[i], plane[j], same)
            step_i = rotated[i].theta_max / _N_SAMPLES
            step_j = rotated[j].theta_max / _N_SAMPLES
            roots = []
            for mi, mj in cand:
                found = _refine_crossing(
                    rotated[i], rotated[j],
                    mi * step_i, (mi + 1) * step_i,
                    mj * step_j, (mj + 1) * step_j,
                )
                roots.extend(found)
            # Deduplicate roots shared by adjacent segment pairs (the slack
            # in the hit test lets a boundary root be found from both cells).
            uniq = []
            for ti, tj in sorted(roots):
                dup = False
                for ui, uj in uniq:
                    wi = min(abs(ti - ui), rotated[i].theta_max - abs(ti - ui))
                    wj = min(abs(tj - uj), rotated[j].theta_max - abs(tj - uj))
                    if wi < 1e-3 * step_i and wj < 1e-3 * step_j:
                        dup = True
                        break
                if not dup:
                    uniq.append((ti, tj))
            for ti, tj in uniq:
                if same and tj < ti:
                    ti, tj = tj, ti
                p_i, tan_i, d_i = _tangent_and_depth(rotated[i], ti)
                p_j, tan_j, d_j = _tangent_and_depth(rotated[j], tj)
                gap = float(np.linalg.norm(p_i - p_j))
                if gap > _PLANE_GAP * max(scale, 1.0) * 1e3:
                    # Refinement failed to converge: treat as tangency.
                    raise _Reject(f"crossing refinement stalled (gap {gap:.3e})", "tangency")
                ni = float(np.linalg.norm(tan_i))
                nj = float(np.linalg.norm(tan_j))
                sin_angle = abs(_cross2(tan_i, tan_j)) / max(ni * nj, 1e-300)
                if sin_angle < _TRANSVERSALITY:
                    raise _Reject("tangential crossing", "tangency")
                if abs(d_i - d_j) <= tol:
                    raise _Reject(
                        f"crossing depth gap {abs(d_i - d_j):.3e} below tol", "depth"
                    )
                over = 0 if d_i > d_j else 1
                t_over, t_under = (tan_i, tan_j) if over == 0 else (tan_j, tan_i)
                sign = _SIGN_FLIP * (1 if _cross2(t_over, t_under) > 0 else -1)
                crossings.append(
                    Crossing(
                        i, j, float(ti), float(tj),
                        0.5 * (p_i + p_j), sign, over,
                        d_i, d_j, tan_i, tan_j,
                    )
                )
    # No two crossings may share a plane position (triple-point guard).
    positions = [x.pos for x in crossings]
    for a in range(len(positions)):
        for b in range(a + 1, len(positions)):
            if np.linalg.norm(positions[a] - positions[b]) < 1e-6 * scale:
                raise _Reject("two crossings nearly coincide", "separation")
    return LinkDiagram(rotated, thetas, plane, depth, crossings, seed, attempt, unitary, tol)


def project_diagram(curves, seed: int = 0, tol: float = 1e-9):
    """Project curves to a generic plane diagram, retrying with rotations.

    Attempt 0 uses the chart as-is; later attempts compose with seeded
    near-identity unitaries of growing size.  When all curves advertise a
    closed-form distance (round circles), attempts continue until the
    crossing count reaches the linking-number floor 2*sum|lk(i,j)| with no
    self-crossings, keeping the best generic diagram otherwise.
    """
    curves = list(curves)
    if not curves:
        raise ValueError("need at least one curve")
    floor = _crossing_floor(curves) if all(
        getattr(c, "is_round_circle", False) for c in curves
    ) else None
    rejects = []
    best = None
    successes = 0
    for attempt in range(_MAX_ATTEMPTS):
        unitary = np.eye(2, dtype=complex) if attempt == 0 else seeded_unitary(seed, attempt)
        try:
            diag = _attempt_projection(curves, seed, attempt, unitary, tol)
        except _Reject as r:
            rejects.append((attempt, r.kind, str(r)))
            continue
        if floor is None:
            return diag
        successes += 1
        selfs = sum(1 for x in diag.crossings if x.ci == x.cj)
        if diag.crossing_count == floor and selfs == 0:
            return diag
        if best is None or diag.crossing_count < best.crossing_count:
            best = diag
        if successes >= 8:
            break
    if best is not None:
        return best
    kinds = {k for _, k, _ in rejects}
    trace = "; ".join(f"attempt {a}: {msg}" for a, _, msg in rejects)
    if kinds == {"depth"}:
        raise ToleranceViolation(f"all attempts failed the depth-gap tolerance: {trace}")
    raise GenericityFailure("no generic projection found", trace)


def _crossing_floor(curves) -> int | None:
    """2 * sum |lk(i,j)| over pairs, from the exact polygon integral.

    The floor is attained exactly when every linked pair crosses minimally
    and nothing self-crosses; round circles admit such projections, so the
    attempt loop can prefer them.  Computed on the unrotated curves via a
    fixed generic rotation (linking numbers are rotation-invariant);
    requires every curve to keep clear of the pole under that rotation,
    else the preference is disabled.
    """
    from .gauss import linking_number

    if len(curves) < 2:
        return 0
    probe = su2_from_quaternion([math.sqrt(1 - 0.03 - 0.02 - 0.01), math.sqrt(0.03), math.sqrt(0.02), math.sqrt(0.01)])
    rotated = [RotatedCurve(c, probe) for c in curves]
    polys = []
    for c in rotated:
        try:
            if _min_dist2_to_pole(c) < 1e-3:
                return None
        except Exception:
            return None
        th = np.arange(256) * (c.theta_max / 256)
        pts = c.eval(th)
        plane, depth = stereographic(pts)
        polys.append(np.column_stack((plane[:, 0], plane[:, 1], depth)))
    total = 0
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            raw = linking_number(polys[i], polys[j])
            nearest = round(raw)
            if abs(raw - nearest) > 0.2:
                return None
            total += abs(int(nearest))
    return 2 * total


def diagram_linking_matrix(diag: LinkDiagram):
    """Half the signed inter-component crossing sums, as an integer matrix."""
    m = diag.n_components
    out = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            s = sum(x.sign for x in diag.component_crossings(i, j))
            if s % 2 != 0:
                raise OddCrossingParity(i, j, s)
            out[i][j] = out[j][i] = s // 2
    return out
