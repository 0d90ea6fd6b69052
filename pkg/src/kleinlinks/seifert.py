"""Seifert's algorithm on projected link diagrams.

The classical construction, realized concretely on the plane diagram:

1. every crossing is smoothed respecting orientation, which splits the
   diagram strands into Seifert circles;
2. each circle bounds a flat disk placed at an integer height equal to its
   nesting depth, and each crossing contributes a half-twisted band joining
   the two disk boundaries it touches; the band keeps the original strand
   chords as its free edges, so the crossing (with its over/under data) is
   restored on the surface boundary;
3. a homology basis of the surface is read off the circle/band graph (one
   loop per non-tree band); each loop is realized as a closed polyline made
   of disk collars and band tracks, and the Seifert pairing is evaluated
   with the exact Gauss integral between on-surface loops and copies pushed
   off along the surface normal.

Disks sit one unit apart vertically while every local scale -- crossing
zone, band bump, collar inset, push distance -- is tied to the crossing
separation of the diagram, keeping each band a balanced ribbon.  Where
a band meets its disk the push direction is blended into the corner
bisector so the pushed copy clears both sheets of the crease at once.  The
pushed loops are then certified against the realized surface: no pushed
segment may pierce a disk interior or a band sheet, the push distance is
halved until the certificate holds, and every pairing must land near an
integer before it is rounded.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ShapeMismatch, SplitDiagram, ToleranceViolation
from .gauss import linking_number
from .projection import LinkDiagram, _plane_scalar, _tangent_and_depth

__all__ = ["SeifertMatrix", "split_shadow", "seifert_circles", "seifert_matrix_from_diagram"]

_BAND_SAMPLES = 25     # points along each band track
_BUMP = 0.3            # vertical half-separation of the strands at a crossing
_TRACK_W = 0.25        # mid-band rung fraction of the loop track
_RHO_FACTOR = 0.2      # crossing-ball radius as a fraction of local clearance
_RHO_CAP = 0.25        # absolute ceiling on the crossing-ball radius
_THETA_CAP = 0.3       # strand truncation may eat at most this gap fraction
_COLLAR_FRAC = 0.3     # collar inset from the circle boundary (units rho_min)
_PUSH_CAP = 0.1        # absolute ceiling on the push-off offset
_PUSH_TRIES = 7        # halvings of the push-off before giving up
_INT_TOL = 0.1         # worst acceptable distance of a raw pairing to an integer


class SeifertMatrix:
    """Square integer matrix of the Seifert pairing on a surface basis."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        for row in rows:
            if len(row) != len(rows):
                raise ShapeMismatch(
                    f"Seifert matrix must be square, got row of length {len(row)} in rank {len(rows)}"
                )
        self.entries = rows

    @property
    def rank(self) -> int:
        return len(self.entries)

    def toarray(self) -> np.ndarray:
        return np.array([list(r) for r in self.entries], dtype=np.int64).reshape(self.rank, self.rank)

    def __eq__(self, other) -> bool:
        return isinstance(other, SeifertMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SeifertMatrix({[list(r) for r in self.entries]})"


def split_shadow(diag: LinkDiagram) -> list[list[int]]:
    """Partition diagram components into groups connected through crossings.

    Args:
        diag: any projected diagram.

    Returns:
        Sorted list of sorted component-index groups.  More than one group
        certifies a split diagram.
    """
    parent = list(range(diag.n_components))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in diag.crossings:
        ra, rb = find(x.ci), find(x.cj)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for c in range(diag.n_components):
        groups.setdefault(find(c), []).append(c)
    return sorted(groups.values())


def seifert_circles(diag: LinkDiagram) -> list[np.ndarray]:
    """Plane polylines of the Seifert circles of a connected-shadow diagram."""
    if len(split_shadow(diag)) > 1:
        raise SplitDiagram("diagram shadow is disconnected")
    if not diag.crossings:
        return [np.array(diag.plane[c]) for c in range(diag.n_components)]
    return [c.points.copy() for c in _Surface(diag).circles]


def seifert_matrix_from_diagram(diag: LinkDiagram) -> SeifertMatrix:
    """Seifert matrix of the banded surface spanned on a diagram.

    Args:
        diag: projected diagram whose shadow is connected.

    Returns:
        SeifertMatrix of rank crossings - circles + 1.

    Raises:
        SplitDiagram: if the shadow has more than one group.
        ToleranceViolation: if the pushed loops cannot be certified clear of
            the surface, or a pairing does not land near an integer.
    """
    if len(split_shadow(diag)) > 1:
        raise SplitDiagram("diagram shadow is disconnected")
    if not diag.crossings:
        return SeifertMatrix([])
    surf = _Surface(diag)
    nu = surf.nu
    loops: list[_Loop] = []
    trouble = ""
    for _ in range(_PUSH_TRIES):
        loops = surf.basis_loops(nu)
        trouble = surf.certify(loops, nu) or ""
        if not trouble:
            break
        nu *= 0.5
    if trouble:
        raise ToleranceViolation(
            "pushed loops keep touching the spanning surface: " + trouble
        )
    rank = len(loops)
    expected = len(diag.crossings) - len(surf.circles) + 1
    if rank != expected:
        raise RuntimeError(
            f"homology rank {rank} disagrees with crossings-circles+1 = {expected}"
        )
    ent = [[0] * rank for _ in range(rank)]
    worst = 0.0
    for i, li in enumerate(loops):
        for j, lj in enumerate(loops):
            raw = linking_number(li.points, lj.pushed)
            near = round(raw)
            worst = max(worst, abs(raw - near))
            if abs(raw - near) > _INT_TOL:
                raise ToleranceViolation(
                    f"Seifert pairing ({i},{j}) = {raw:.6f} is not near an integer"
                )
            ent[i][j] = int(near)
    return SeifertMatrix(ent)


# --------------------------------------------------------------------------
# internal geometry
# --------------------------------------------------------------------------


class _Circle:
    """One Seifert circle: closed plane polyline plus bookkeeping."""

    __slots__ = ("points", "feet", "eta", "depth", "height", "rep")

    def __init__(self, points, feet, rep):
        self.points = points          # (K, 2) closed polyline, link orientation
        self.feet = feet              # {(crossing idx, side 0/1): vertex index}
        self.rep = rep                # index of a robust interior sample
        self.eta = 0                  # +-1, plane orientation (shoelace sign)
        self.depth = 0                # how many other circles contain it
        self.height = 0.0             # disk height (= depth)


class _Loop:
    """A realized basis loop and its push-off."""

    __slots__ = ("points", "pushed")

    def __init__(self, points, offsets):
        self.points = points
        self.pushed = points + offsets


class _Surface:
    def __init__(self, diag: LinkDiagram):
        self.diag = diag
        self.cross = diag.crossings
        self._passages()
        self._scales()
        self._truncate()
        self._build_circles()
        self._orient()
        self._graph()
        self._band_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._tri_cache: dict[int, tuple[np.ndarray, ...]] = {}

    # -- smoothing combinatorics -------------------------------------------

    def _passages(self):
        diag = self.diag
        self.pas = [diag.passages(c) for c in range(diag.n_components)]
        for c, plist in enumerate(self.pas):
            if not plist:
                # After the split gate every component meets a crossing.
                raise RuntimeError(f"component {c} has no passages on a connected shadow")
        self.pindex = {}
        for c, plist in enumerate(self.pas):
            for m, (_, xi, role) in enumerate(plist):
                self.pindex[(xi, role)] = (c, m)
        # Oriented smoothing: the piece entering strand role r continues into
        # the piece leaving the other strand.  Piece (c, m) runs from passage
        # m to passage m+1 (cyclically).
        self.succ = {}
        for xi in range(len(self.cross)):
            c0, m0 = self.pindex[(xi, 0)]
            c1, m1 = self.pindex[(xi, 1)]
            n0, n1 = len(self.pas[c0]), len(self.pas[c1])
            self.succ[(c0, (m0 - 1) % n0)] = (c1, m1)
            self.succ[(c1, (m1 - 1) % n1)] = (c0, m0)

    # -- scale selection ----------------------------------------------------

    def _scales(self):
        diag = self.diag
        pos = np.array([x.pos for x in self.cross])
        if len(pos) >= 2:
            d2 = np.sum((pos[:, None, :] - pos[None, :, :]) ** 2, axis=-1)
            np.fill_diagonal(d2, np.inf)
            sep = math.sqrt(float(d2.min()))
        else:
            sep = math.inf
        allpts = np.vstack(diag.plane)
        extent = float(np.linalg.norm(allpts.max(axis=0) - allpts.min(axis=0)))
        sep = min(sep, extent)

        # Clearance of each crossing from strands not passing through it,
        # measured on the sample grids with the incident passages masked out.
        self.rho = []
        for xi, x in enumerate(self.cross):
            clear = sep
            for c in range(diag.n_components):
                th = diag.thetas[c]
                tmax = self.diag.curves[c].theta_max
                mask = np.ones(len(th), dtype=bool)
                for (cc, tt, tan) in ((x.ci, x.ti, x.tan_i), (x.cj, x.tj, x.tan_j)):
                    if cc != c:
                        continue
                    speed = max(float(np.linalg.norm(tan)), 1e-12)
                    win = 3.0 * _RHO_FACTOR * sep / speed
                    d = np.abs(th - tt)
                    d = np.minimum(d, tmax - d)
                    mask &= d > win
                if mask.any():
                    dist = np.linalg.norm(diag.plane[c][mask] - x.pos, axis=1)
                    clear = min(clear, float(dist.min()))
            self.rho.append(min(_RHO_FACTOR * clear, _RHO_CAP))
        self.rho_min = min(self.rho)
        if self.rho_min <= 0:
            raise RuntimeError("degenerate crossing clearance")
        self.delta = _COLLAR_FRAC * self.rho_min
        self.nu = min(_PUSH_CAP, 0.35 * self.delta)

    def _truncate(self):
        """Angle windows eaten out of each strand around each passage.

        The feet (truncation endpoints) become the attachment chords of the
        bands; capping by the neighbouring passage gaps keeps every strand
        piece nonempty.
        """
        self.dth_before = {}
        self.dth_after = {}
        self.foot_in = {}
        self.foot_out = {}
        for c, plist in enumerate(self.pas):
            n = len(plist)
            tmax = self.diag.curves[c].theta_max
            for m, (th, xi, role) in enumerate(plist):
                g_prev = (th - plist[m - 1][0]) % tmax if n > 1 else tmax
                g_next = (plist[(m + 1) % n][0] - th) % tmax if n > 1 else tmax
                _, tan, _ = _tangent_and_depth(self.diag.curves[c], th)
                speed = max(float(np.linalg.norm(tan)), 1e-12)
                db = min(self.rho[xi] / speed, _THETA_CAP * g_prev)
                da = min(self.rho[xi] / speed, _THETA_CAP * g_next)
                self.dth_before[(xi, role)] = db
                self.dth_after[(xi, role)] = da
                self.foot_in[(xi, role)] = np.array(_plane_scalar(self.diag.curves[c], th - db))
                self.foot_out[(xi, role)] = np.array(_plane_scalar(self.diag.curves[c], th + da))

    # -- circle polylines ---------------------------------------------------

    def _piece_points(self, c, m):
        """Sampled strand piece from passage m to m+1 (truncated both ends)."""
        plist = self.pas[c]
        n = len(plist)
        tmax = self.diag.curves[c].theta_max
        step = tmax / len(self.diag.thetas[c])
        th_a, xi_a, role_a = plist[m]
        th_b, xi_b, role_b = plist[(m + 1) % n]
        if n == 1 or th_b <= th_a:
            th_b += tmax
        a = th_a + self.dth_after[(xi_a, role_a)]
        b = th_b - self.dth_before[(xi_b, role_b)]
        pts = [self.foot_out[(xi_a, role_a)]]
        k0 = math.ceil(a / step + 1e-9)
        k1 = math.floor(b / step - 1e-9)
        ngrid = len(self.diag.thetas[c])
        for k in range(k0, k1 + 1):
            pts.append(self.diag.plane[c][k % ngrid])
        pts.append(self.foot_in[(xi_b, role_b)])
        return pts, (xi_b, role_b)

    def _build_circles(self):
        # Cycle decomposition of the smoothing permutation.
        todo = set(self.succ.keys())
        self.circles: list[_Circle] = []
        self.circle_of_piece = {}
        for start in sorted(todo):
            if start not in todo:
                continue
            cyc = []
            cur = start
            while True:
                cyc.append(cur)
                todo.discard(cur)
                cur = self.succ[cur]
                if cur == start:
                    break
            cid = len(self.circles)
            pts: list[np.ndarray] = []
            feet = {}
            rep = None
            best_len = -1
            for (c, m) in cyc:
                self.circle_of_piece[(c, m)] = cid
                piece, (xi, role) = self._piece_points(c, m)
                if len(piece) > best_len:
                    best_len = len(piece)
                    rep = len(pts) + len(piece) // 2
                pts.extend(piece)
                # Jog chord to the next piece; its midpoint is the band foot.
                nxt = self.succ[(c, m)]
                nxt_pl = self.pas[nxt[0]][nxt[1]]
                q = self.foot_out[(nxt_pl[1], nxt_pl[2])]
                feet[(xi, role)] = len(pts)
                pts.append(0.5 * (pts[-1] + q))
            self.circles.append(_Circle(np.array(pts), feet, rep))

    # -- orientation, nesting, heights -------------------------------------

    @staticmethod
    def _shoelace(poly):
        x, y = poly[:, 0], poly[:, 1]
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    @staticmethod
    def _contains(poly, pt):
        """Even-odd rule: does the closed polyline contain the point."""
        px, py = float(pt[0]), float(pt[1])
        x0, y0 = poly[:, 0], poly[:, 1]
        x1, y1 = np.roll(x0, -1), np.roll(y0, -1)
        cond = (y0 > py) != (y1 > py)
        with np.errstate(divide="ignore", invalid="ignore"):
            xs = x0 + (py - y0) * (x1 - x0) / (y1 - y0)
        hits = cond & (xs > px)
        return bool(np.count_nonzero(hits) % 2)

    def _orient(self):
        ncirc = len(self.circles)
        self.inside = np.zeros((ncirc, ncirc), dtype=bool)
        for v, cv in enumerate(self.circles):
            area = self._shoelace(cv.points)
            if area == 0.0:
                raise RuntimeError("degenerate Seifert circle (zero area)")
            cv.eta = 1 if area > 0 else -1
        for v, cv in enumerate(self.circles):
            rep = cv.points[cv.rep]
            for u, cu in enumerate(self.circles):
                if u != v and self._contains(cu.points, rep):
                    self.inside[v, u] = True
            cv.depth = int(np.count_nonzero(self.inside[v]))
            cv.height = float(cv.depth)
        # Planarity sanity at every band: side-by-side circles have opposite
        # plane orientation and equal depth; nested neighbours share it and
        # differ by one level.
        for xi in range(len(self.cross)):
            u = self._side_circle(xi, 0)
            v = self._side_circle(xi, 1)
            if u == v:
                continue
            cu, cv = self.circles[u], self.circles[v]
            if cu.depth == cv.depth:
                ok = (cu.eta == -cv.eta) and not self.inside[u, v] and not self.inside[v, u]
            elif abs(cu.depth - cv.depth) == 1:
                inner, outer = (u, v) if cu.depth > cv.depth else (v, u)
                ok = (cu.eta == cv.eta) and self.inside[inner, outer]
            else:
                ok = False
            if not ok:
                raise RuntimeError(
                    f"band {xi} joins circles {u},{v} with inconsistent nesting/orientation"
                )

    def _side_circle(self, xi, side):
        """Circle carrying the side-`side` foot of crossing xi.

        Side r's jog continues the piece that enters the crossing on strand
        role r, so it lives on that piece's circle.
        """
        c, m = self.pindex[(xi, side)]
        return self.circle_of_piece[(c, (m - 1) % len(self.pas[c]))]

    # -- circle/band graph --------------------------------------------------

    def _graph(self):
        ncirc = len(self.circles)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(ncirc)]
        self.eside = []
        for xi in range(len(self.cross)):
            a = self._side_circle(xi, 0)
            b = self._side_circle(xi, 1)
            self.eside.append((a, b))
            if a != b:
                adj[a].append((b, xi))
                adj[b].append((a, xi))
        for lst in adj:
            lst.sort()
        parent = [-1] * ncirc
        parent_edge = [-1] * ncirc
        order = [0]
        seen = [False] * ncirc
        seen[0] = True
        tree = set()
        while order:
            v = order.pop(0)
            for (w, xi) in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    parent_edge[w] = xi
                    tree.add(xi)
                    order.append(w)
        if not all(seen):
            raise RuntimeError("Seifert graph disconnected on a connected shadow")
        self.parent = parent
        self.parent_edge = parent_edge
        self.tree = tree

    def _tree_path(self, s, t):
        """Tree edges from circle s to circle t as (crossing, from, to) steps."""
        mark = set()
        v = t
        while v != -1:
            mark.add(v)
            v = self.parent[v]
        up = []
        v = s
        while v not in mark:
            up.append((self.parent_edge[v], v, self.parent[v]))
            v = self.parent[v]
        lca = v
        down = []
        v = t
        while v != lca:
            down.append((self.parent_edge[v], self.parent[v], v))
            v = self.parent[v]
        return up + list(reversed(down))

    # -- band and collar geometry ------------------------------------------

    def _bump_amp(self, xi):
        """Edge-bump amplitude of band xi.

        A tall bump spreads the half-twist over a wide vertical fan, so the
        twist region is large against the push distance and the pushoff
        stays in the locally-flat regime of the sheet; a bump tied to the
        (possibly tiny) zone radius would compress the whole twist into a
        column thinner than the push distance.
        """
        return _BUMP

    def _sheet_edges(self, xi, s):
        """Free-edge rails of band xi sampled at parameters s in [0, 1]."""
        x = self.cross[xi]
        a1 = self.foot_in[(xi, 0)]
        b1 = self.foot_out[(xi, 0)]
        a2 = self.foot_in[(xi, 1)]
        b2 = self.foot_out[(xi, 1)]
        hu = self.circles[self._side_circle(xi, 0)].height
        hv = self.circles[self._side_circle(xi, 1)].height
        bump = self._bump_amp(xi) * np.sin(np.pi * s) ** 2
        sgn1 = 1.0 if x.over == 0 else -1.0    # strand role 0 bumps up iff over
        lerp = hu + s * (hv - hu)
        e_plus = np.column_stack([np.outer(1 - s, a1) + np.outer(s, b1), lerp + sgn1 * bump])
        e_minus = np.column_stack([np.outer(1 - s, b2) + np.outer(s, a2), lerp - sgn1 * bump])
        return e_plus, e_minus

    def _frame(self, xi, s):
        """Track point and raw unit surface normal of band xi at parameters s.

        The track rides the rung fraction w(s) = 1/2 + (w0 - 1/2) sin^2(pi s):
        it starts and ends on the attachment-chord midpoints (so collars join
        it seamlessly) but drifts toward one free edge over the middle of the
        band.  The band centreline is the one curve whose normal pushoff can
        land back on the sheet where the rungs pinch in the plane -- the two
        sheet branches through the pinch meet the centreline height exactly --
        while an off-centre track keeps a z-gap of order the bump amplitude
        to every other branch.
        """
        x = self.cross[xi]
        cu = self.circles[self._side_circle(xi, 0)]
        cv = self.circles[self._side_circle(xi, 1)]
        a1 = self.foot_in[(xi, 0)]
        b1 = self.foot_out[(xi, 0)]
        a2 = self.foot_in[(xi, 1)]
        b2 = self.foot_out[(xi, 1)]
        sgn1 = 1.0 if x.over == 0 else -1.0
        amp = self._bump_amp(xi)
        e_plus, e_minus = self._sheet_edges(xi, s)
        w = (0.5 + (_TRACK_W - 0.5) * np.sin(np.pi * s) ** 2)[:, None]
        track = (1.0 - w) * e_plus + w * e_minus
        # Surface tangent plane at (s, w(s)): the s-partial at fixed w and
        # the rung direction.  The w-drift of the track lies in the plane,
        # so it never enters the normal.
        dz = cv.height - cu.height
        bumpd = amp * np.pi * np.sin(2.0 * np.pi * s)
        ep_d = np.column_stack([np.tile(b1 - a1, (len(s), 1)), dz + sgn1 * bumpd])
        em_d = np.column_stack([np.tile(a2 - b2, (len(s), 1)), dz - sgn1 * bumpd])
        x_s = (1.0 - w) * ep_d + w * em_d
        x_w = e_minus - e_plus
        raw = np.cross(x_s, x_w)
        norms = np.linalg.norm(raw, axis=1)
        if norms.min() < 1e-12:
            raise RuntimeError(f"band {xi} has a degenerate frame")
        return track, raw / norms[:, None]

    def _band(self, xi):
        """Refined track, normal field, and parameter grid of band xi.

        Near the planar pinch of the rungs the normal field can turn through
        a right angle within one coarse interval, and a chord of the pushed
        polyline would shortcut straight through the clearance tube.  The
        grid is therefore refined until the normal turn per interval is
        small, which pins the pushed polyline to the smooth pushoff curve.
        """
        if xi in self._band_cache:
            return self._band_cache[xi]
        x = self.cross[xi]
        cu = self.circles[self._side_circle(xi, 0)]
        cv = self.circles[self._side_circle(xi, 1)]
        s0 = np.linspace(0.0, 1.0, _BAND_SAMPLES)
        _, n0 = self._frame(xi, s0)
        dots = np.clip(np.sum(n0[:-1] * n0[1:], axis=1), -1.0, 1.0)
        turns = np.arccos(dots)
        parts = [np.array([0.0])]
        for k, tk in enumerate(turns):
            sub = int(np.clip(math.ceil(tk / 0.03), 1, 64))
            parts.append(np.linspace(s0[k], s0[k + 1], sub + 1)[1:])
        s = np.concatenate(parts)
        track, raw = self._frame(xi, s)
        # Calibrate the sign so the normal continues the disk normals across
        # both attachment creases: reference eta * (z-hat + toward-crossing).
        d0 = float(raw[0] @ self._crease_ref(cu.eta, x.pos, track[0, :2]))
        d1 = float(raw[-1] @ self._crease_ref(cv.eta, x.pos, track[-1, :2]))
        f = 1.0 if (d0 if abs(d0) >= abs(d1) else d1) >= 0 else -1.0
        if min(f * d0, f * d1) <= 0.02:
            raise RuntimeError(f"band {xi} normal field fails to match its disks")
        # The restored crossing must put the over strand on top where the
        # free edges cross in the plane.
        a1 = self.foot_in[(xi, 0)]
        b1 = self.foot_out[(xi, 0)]
        a2 = self.foot_in[(xi, 1)]
        b2 = self.foot_out[(xi, 1)]
        sgn1 = 1.0 if x.over == 0 else -1.0
        self._check_over(xi, a1, b1, b2, a2,
                         np.array([cu.height, cv.height]),
                         self._bump_amp(xi), sgn1)
        self._band_cache[xi] = (s, track, f * raw)
        return self._band_cache[xi]

    @staticmethod
    def _crease_ref(eta, p, foot):
        ref = np.array([0.0, 0.0, float(eta)])
        c = p - foot
        n = np.linalg.norm(c)
        if n > 1e-12:
            ref = ref + eta * np.array([c[0] / n, c[1] / n, 0.0])
        return ref

    @staticmethod
    def _check_over(xi, a1, b1, b2, a2, lerp, amp, sgn1):
        d1 = b1 - a1
        d2 = a2 - b2
        den = d1[0] * (-d2[1]) - (-d2[0]) * d1[1]
        if abs(den) < 1e-15:
            return
        rhs = b2 - a1
        sp = (rhs[0] * (-d2[1]) - (-d2[0]) * rhs[1]) / den
        sm = (d1[0] * rhs[1] - rhs[0] * d1[1]) / den
        if not (0.0 < sp < 1.0 and 0.0 < sm < 1.0):
            return
        hu, hv = lerp[0], lerp[-1]
        zp = hu + sp * (hv - hu) + sgn1 * amp * math.sin(math.pi * sp) ** 2
        zm = hu + sm * (hv - hu) - sgn1 * amp * math.sin(math.pi * sm) ** 2
        if sgn1 * (zp - zm) <= 0.3 * amp:
            raise RuntimeError(f"band {xi} fails to restore its crossing over/under")

    def _collar(self, cid, i_in, i_out):
        """Inset walk on circle `cid` from vertex i_in to i_out (exclusive).

        Returns plane points offset into the disk interior, thinned
        adaptively: fine around crossing balls (so the walk follows the
        smoothing jogs faithfully), coarse on open runs.
        """
        circ = self.circles[cid]
        pts = circ.points
        k = len(pts)
        idx = []
        i = i_in
        while i != i_out:
            i = (i + 1) % k
            if i != i_out:
                idx.append(i)
        if not idx:
            return []
        # Offset each boundary edge by delta toward the disk interior and
        # join the offsets at every vertex.  Where the boundary turns away
        # from the collar side the join is an arc pivoting exactly about the
        # corner vertex: a band foot ending at that vertex puts a wall on
        # the adjacent edge, and the pivot arc rounds the free end of the
        # wall at radius delta instead of cutting across its base.  Where
        # the boundary turns toward the collar side the two offsets are
        # simply bridged; the bridge stays on the interior side of both
        # edges.  Corner points are immune to thinning so that no chord of
        # the walk ever shortcuts a join.
        chain = [pts[i_in]] + [pts[i] for i in idx] + [pts[i_out]]
        normals = []
        prev = None
        for a, b in zip(chain[:-1], chain[1:]):
            t = b - a
            tl = float(np.hypot(t[0], t[1]))
            if tl < 1e-15:
                normals.append(prev if prev is not None else np.array([1.0, 0.0]))
                continue
            n = circ.eta * np.array([-t[1] / tl, t[0] / tl])
            normals.append(n)
            prev = n
        walk: list[np.ndarray] = []
        forced: list[bool] = []
        for j, v in enumerate(chain[1:-1]):
            n0, n1 = normals[j], normals[j + 1]
            crossz = float(n0[0] * n1[1] - n0[1] * n1[0])
            turn = math.acos(float(np.clip(n0 @ n1, -1.0, 1.0)))
            sharp = turn > 0.15
            walk.append(v + self.delta * n0)
            forced.append(sharp)
            if circ.eta * crossz < 0:
                sgn = 1.0 if crossz >= 0 else -1.0
                m = int(turn / 0.3)
                for t in range(1, m + 1):
                    ang = sgn * turn * t / (m + 1)
                    ca, sa = math.cos(ang), math.sin(ang)
                    nj = np.array([ca * n0[0] - sa * n0[1], sa * n0[0] + ca * n0[1]])
                    walk.append(v + self.delta * nj)
                    forced.append(True)
            walk.append(v + self.delta * n1)
            forced.append(sharp)
        cpos = np.array([x.pos for x in self.cross])
        woff = np.array(walk)
        dmin = np.min(np.linalg.norm(woff[:, None, :] - cpos[None, :, :], axis=2), axis=1)
        kept = []
        acc = math.inf
        last = None
        for q, dc, keep in zip(walk, dmin, forced):
            step = min(0.35, max(0.33 * dc, 0.45 * self.rho_min))
            if last is not None:
                acc = float(np.linalg.norm(q - last))
            if last is None or keep or acc >= step:
                kept.append(q.copy())
                last = q
        return kept

    # -- basis loops --------------------------------------------------------

    def basis_loops(self, nu: float | None = None) -> list[_Loop]:
        nu = self.nu if nu is None else nu
        loops = []
        for xi in sorted(set(range(len(self.cross))) - self.tree):
            a, b = self.eside[xi]
            steps = [(xi, a, b)] + ([] if a == b else self._tree_path(b, a))
            loops.append(self._realize(steps, nu))
        return loops

    @staticmethod
    def _bisect(a, b):
        """Unit bisector of two unit directions (fallback: the second one)."""
        s = a + b
        n = float(np.linalg.norm(s))
        return s / n if n > 1e-6 else b

    def _realize(self, steps, nu):
        """Concatenate band tracks and connecting collars into one loop.

        The push direction rides the band normal along each track and the
        disk normal along each collar; at the two attachment creases of a
        band it is blended into the corner bisector, which clears both the
        disk sheet and the band wall of the crease at once.
        """
        pts: list[np.ndarray] = []
        offs: list[np.ndarray] = []
        nstep = len(steps)
        for k, (xi, cfrom, cto) in enumerate(steps):
            _, track, normal = self._band(xi)
            a, b = self.eside[xi]
            if (cfrom, cto) == (a, b):
                side_out = 1
                cpts, cnrm = track, normal
            else:
                if (cfrom, cto) != (b, a):
                    raise RuntimeError("loop step does not match its band")
                side_out = 0
                cpts, cnrm = track[::-1], normal[::-1]
            up_from = np.array([0.0, 0.0, float(self.circles[cfrom].eta)])
            up_to = np.array([0.0, 0.0, float(self.circles[cto].eta)])
            boffs = nu * cnrm
            boffs[0] = nu * self._bisect(cnrm[0], up_from)
            boffs[-1] = nu * self._bisect(cnrm[-1], up_to)
            pts.extend(cpts)
            offs.extend(boffs)
            xi_next, cfrom_next, _ = steps[(k + 1) % nstep]
            side_in_next = 0 if self.eside[xi_next][0] == cfrom_next else 1
            if self.eside[xi_next][0] == self.eside[xi_next][1]:
                # Self-banded circle: entering side is the one not used to exit.
                side_in_next = 0 if (xi_next != xi or side_out == 1) else 1
            cid = cto
            circ = self.circles[cid]
            i_in = circ.feet[(xi, side_out)]
            i_out = circ.feet[(xi_next, side_in_next)]
            collar = self._collar(cid, i_in, i_out)
            up = np.array([0.0, 0.0, nu * circ.eta])
            for q in collar:
                pts.append(np.array([q[0], q[1], circ.height]))
                offs.append(up)
        return _Loop(np.array(pts), np.array(offs))

    def _sheet_triangles(self, xi):
        """Triangulated sheet of band xi, densified where the band twists.

        The chordal facets of a fast-twisting ruled sheet can sag past the
        push scale and report contacts the smooth sheet never makes, so the
        probe grid keeps the normal-field turn per facet small.  Facet
        data is precomputed for the vectorized segment test.
        """
        if xi in self._tri_cache:
            return self._tri_cache[xi]
        base, _, normal = self._band(xi)
        dots = np.clip(np.sum(normal[:-1] * normal[1:], axis=1), -1.0, 1.0)
        turns = np.arccos(dots)
        parts = [np.array([0.0])]
        for k, tk in enumerate(turns):
            sub = int(np.clip(math.ceil(tk / 0.02), 1, 96))
            parts.append(np.linspace(base[k], base[k + 1], sub + 1)[1:])
        s = np.concatenate(parts)
        ep, em = self._sheet_edges(xi, s)
        a = np.concatenate([ep[:-1], ep[:-1]])
        b = np.concatenate([em[:-1], em[1:]])
        c = np.concatenate([em[1:], ep[1:]])
        e1 = b - a
        e2 = c - a
        nvec = np.cross(e1, e2)
        nn = np.linalg.norm(nvec, axis=1)
        d00 = np.sum(e1 * e1, axis=1)
        d01 = np.sum(e1 * e2, axis=1)
        d11 = np.sum(e2 * e2, axis=1)
        gden = d00 * d11 - d01 * d01
        keep = (nn > 1e-18) & (gden > 1e-24)
        self._tri_cache[xi] = (
            a[keep], e1[keep], e2[keep], nvec[keep], nn[keep],
            d00[keep], d01[keep], d11[keep], gden[keep],
        )
        return self._tri_cache[xi]

    def certify(self, loops, nu):
        """Check that every pushed loop stays strictly off the surface.

        The straight-line shrink between a pushed loop and its surface copy
        sweeps the push segment, so the pairings read the surface framing
        only while the pushed curves remain inside the collar on their side
        of every sheet.  Any contact with a band sheet or a disk interior
        invalidates the push scale; touching counts.

        Returns:
            None when clean, otherwise a short description of the first
            violation found.
        """
        for li, loop in enumerate(loops):
            q = np.vstack([loop.pushed, loop.pushed[:1]])
            a, b = q[:-1], q[1:]
            d = b - a
            seglen = np.linalg.norm(d, axis=1)
            mid = 0.5 * (a[:, :2] + b[:, :2])
            for xi, x in enumerate(self.cross):
                reach = 6.0 * self.rho[xi] + 0.6 * seglen
                near = np.linalg.norm(mid - np.asarray(x.pos), axis=1) < reach
                idxs = np.nonzero(near)[0]
                for si in idxs:
                    if self._tri_hit(a[si], d[si], seglen[si], xi, nu):
                        return f"loop {li} meets the band at crossing {xi}"
            cid = self._disk_hits(q)
            if cid is not None:
                return f"loop {li} pierces the disk of circle {cid}"
        return None

    def _tri_hit(self, a, d, seglen, xi, nu):
        """Does the segment (a, a+d) meet any sheet triangle of band xi."""
        ta, e1, e2, nvec, nn, d00, d01, d11, gden = self._sheet_triangles(xi)
        rhs = ta - a[None, :]
        den = nvec @ d
        num = np.sum(rhs * nvec, axis=1)
        para = np.abs(den) < 1e-12 * seglen * nn
        graze = para & (np.abs(num) < 0.25 * nu * nn)
        if graze.any():
            for pt in (a, a + 0.5 * d, a + d):
                w = pt[None, :] - ta[graze]
                d20 = np.sum(w * e1[graze], axis=1)
                d21 = np.sum(w * e2[graze], axis=1)
                u = (d11[graze] * d20 - d01[graze] * d21) / gden[graze]
                v = (d00[graze] * d21 - d01[graze] * d20) / gden[graze]
                if np.any((u > -1e-9) & (v > -1e-9) & (u + v < 1.0 + 1e-9)):
                    return True
        live = ~para & (den != 0.0)
        if not live.any():
            return False
        t = num[live] / den[live]
        sel = (t > -1e-9) & (t < 1.0 + 1e-9)
        if not sel.any():
            return False
        idx = np.nonzero(live)[0][sel]
        pts = a[None, :] + t[sel, None] * d[None, :]
        w = pts - ta[idx]
        d20 = np.sum(w * e1[idx], axis=1)
        d21 = np.sum(w * e2[idx], axis=1)
        u = (d11[idx] * d20 - d01[idx] * d21) / gden[idx]
        v = (d00[idx] * d21 - d01[idx] * d20) / gden[idx]
        return bool(np.any((u > -1e-9) & (v > -1e-9) & (u + v < 1.0 + 1e-9)))

    def _disk_hits(self, q):
        """Circle id whose disk interior a pushed segment crosses, or None."""
        z = q[:, 2]
        for cid, circ in enumerate(self.circles):
            h = float(circ.height)
            side = (z[:-1] - h) * (z[1:] - h)
            for k in np.nonzero(side < -1e-18)[0]:
                t = (h - z[k]) / (z[k + 1] - z[k])
                p = q[k, :2] + t * (q[k + 1, :2] - q[k, :2])
                if self._contains(circ.points, p):
                    return cid
        return None
