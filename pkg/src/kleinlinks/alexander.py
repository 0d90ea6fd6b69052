"""Alexander polynomials of Seifert matrices, with exact integer arithmetic.

The polynomial det(V - t V^T) is recovered from integer determinant
evaluations at rank+1 sample points followed by exact interpolation, so no
intermediate float ever appears.  Normalization divides out the unit
monomial: lowest exponent 0, positive leading coefficient, and the zero
polynomial is the empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction

from .seifert import SeifertMatrix

__all__ = ["LaurentPoly", "alexander", "fibered_obstructions"]


class LaurentPoly:
    """An integer Laurent polynomial in canonical normalized form.

    ``coeffs[i]`` multiplies t^i; the representative is chosen so that
    ``coeffs[0] != 0`` (unit-monomial multiples are identified) and the
    leading coefficient is positive.  The zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        if cs and cs[-1] < 0:
            cs = [-c for c in cs]
        self.coeffs = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the normalized representative (-1 for the zero poly)."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        """Both end coefficients are units (the fibered-necessary shape)."""
        return bool(self.coeffs) and abs(self.coeffs[0]) == 1 and self.coeffs[-1] == 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def _int_det(rows) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), -1)
            if piv < 0:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def alexander(V: SeifertMatrix) -> LaurentPoly:
    """Normalized Alexander polynomial det(V - t V^T) of a Seifert matrix.

    The determinant has degree at most rank, so rank+1 exact evaluations
    pin it down; Lagrange interpolation over rationals recovers integer
    coefficients (asserted).  The empty matrix gives 1.
    """
    n = V.rank
    ent = V.entries
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        m = [[ent[i][j] - x * ent[j][i] for j in range(n)] for i in range(n)]
        ys.append(_int_det(m))
    # Newton's divided differences, exact.
    table = [Fraction(y) for y in ys]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n, -1, -1):
        # coeffs <- coeffs * (t - xs[i]) + table[i]
        carry = [Fraction(0)] * (n + 1)
        for e in range(n, 0, -1):
            carry[e] = coeffs[e - 1] - xs[i] * coeffs[e]
        carry[0] = -xs[i] * coeffs[0] + table[i]
        coeffs = carry
    out = []
    for c in coeffs:
        assert c.denominator == 1, "integer interpolation left a denominator"
        out.append(int(c))
    return LaurentPoly(out)


def fibered_obstructions(delta: LaurentPoly, rank: int) -> list[str]:
    """Obstruction tags a fibered link's Alexander polynomial cannot show.

    Exactly one tag is reported, strongest first: a vanishing polynomial,
    then non-unit end coefficients, then degree below the Seifert rank.
    An empty list means no obstruction (which never certifies fiberedness).
    """
    if delta.is_zero:
        return ["ZeroAlexander"]
    if not delta.is_monic:
        return ["NonMonic"]
    if delta.degree < rank:
        return ["DegreeDeficit"]
    return []
