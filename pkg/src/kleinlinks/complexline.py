"""Complex lines in the unit ball of C^2 and their pair combinatorics.

A complex line {alpha*z + beta*w = gamma} with exact Gaussian-rational
coefficients meets the open unit ball iff |gamma|^2 < |alpha|^2 + |beta|^2.
Two non-proportional lines have at most one affine intersection point; the
pair class compares its squared norm with 1 exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadK, DuplicateLine, IdenticalLines, MissesBall, ParallelPair
from .lines import PairClass, RealArrangement, RealLine
from .rational import GaussianRational

__all__ = [
    "ComplexLine",
    "ComplexArrangement",
    "complexify",
    "classify_complex_pair",
    "validate_complex_arrangement",
    "linking_matrix_combinatorial",
    "hopf_arrangement",
]


def _gr(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    raise TypeError(f"expected exact coefficient, got {type(x).__name__}")


class ComplexLine:
    """{(z,w) in C^2 : alpha*z + beta*w = gamma}, canonical leading 1."""

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha, beta, gamma):
        alpha, beta, gamma = _gr(alpha), _gr(beta), _gr(gamma)
        if alpha.is_zero() and beta.is_zero():
            raise ValueError("(alpha, beta) must not both vanish")
        lead = alpha if not alpha.is_zero() else beta
        self.alpha = alpha / lead
        self.beta = beta / lead
        self.gamma = gamma / lead

    def norm2(self) -> Fraction:
        return self.alpha.abs2() + self.beta.abs2()

    def meets_ball(self) -> bool:
        return self.gamma.abs2() < self.norm2()

    def real_trace(self):
        """The real line cut out on R^2, when the coefficients are real."""
        if all(c.is_real() for c in (self.alpha, self.beta, self.gamma)):
            return RealLine(self.alpha.re, self.beta.re, self.gamma.re)
        return None

    def __eq__(self, other):
        if not isinstance(other, ComplexLine):
            return NotImplemented
        return (self.alpha, self.beta, self.gamma) == (
            other.alpha, other.beta, other.gamma
        )

    def __hash__(self):
        return hash((self.alpha, self.beta, self.gamma))

    def __repr__(self):
        return f"ComplexLine({self.alpha}, {self.beta}, {self.gamma})"


def complexify(l: RealLine) -> ComplexLine:
    """Embed a real chord: same coefficients, real trace unchanged."""
    return ComplexLine(
        GaussianRational(l.a, 0), GaussianRational(l.b, 0), GaussianRational(l.c, 0)
    )


def classify_complex_pair(l1: ComplexLine, l2: ComplexLine) -> PairClass:
    """Exact classification of a complex pair by the affine intersection."""
    if l1 == l2:
        raise IdenticalLines(f"{l1} given twice")
    det = l1.alpha * l2.beta - l2.alpha * l1.beta
    if det.is_zero():
        # Proportional (alpha, beta): affinely parallel, never meet.
        return PairClass(PairClass.HYPERPARALLEL)
    z = (l1.gamma * l2.beta - l2.gamma * l1.beta) / det
    w = (l1.alpha * l2.gamma - l2.alpha * l1.gamma) / det
    n2 = z.abs2() + w.abs2()
    if n2 < 1:
        return PairClass(PairClass.CONCURRENT, (z, w))
    if n2 == 1:
        return PairClass(PairClass.PARALLEL, (z, w))
    return PairClass(PairClass.HYPERPARALLEL, (z, w))


class ComplexArrangement:
    """Validated: pairwise distinct, no pair meeting exactly on the sphere."""

    __slots__ = ("lines", "pair_classes")

    def __init__(self, lines, pair_classes):
        self.lines = tuple(lines)
        self.pair_classes = pair_classes

    @property
    def k(self):
        return len(self.lines)

    def pair(self, i, j) -> PairClass:
        return self.pair_classes[(min(i, j), max(i, j))]

    def __repr__(self):
        return f"ComplexArrangement(k={self.k})"


def validate_complex_arrangement(lines) -> ComplexArrangement:
    lines = list(lines)
    if not lines:
        raise ValueError("arrangement needs at least one line")
    for i, ln in enumerate(lines):
        if not ln.meets_ball():
            raise MissesBall(i)
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i] == lines[j]:
                raise DuplicateLine(i, j)
    pair_classes = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            pc = classify_complex_pair(lines[i], lines[j])
            if pc.is_parallel():
                raise ParallelPair(i, j)
            pair_classes[(i, j)] = pc
    return ComplexArrangement(lines, pair_classes)


def complexify_arrangement(arr: RealArrangement) -> ComplexArrangement:
    return validate_complex_arrangement([complexify(l) for l in arr.lines])


def linking_matrix_combinatorial(arr: ComplexArrangement):
    """Pairwise linking of the boundary circles: 1 per concurrent pair.

    A concurrent pair's holomorphic disks meet once positively inside the
    ball; hyperparallel disks are disjoint.  Diagonal is 0.
    """
    k = arr.k
    m = [[0] * k for _ in range(k)]
    for (i, j), pc in arr.pair_classes.items():
        if pc.is_concurrent():
            m[i][j] = m[j][i] = 1
    return m


def hopf_arrangement(k: int) -> ComplexArrangement:
    """k distinct fibers of the Hopf fibration: lines z = j*w, j = 1..k.

    All pairs meet at the origin, so the link at infinity is the k-component
    link of coherently oriented Hopf fibers.  Slopes stay away from z = 0,
    whose circle passes through the projection pole.
    """
    if k < 1:
        raise BadK(f"need k >= 1, got {k}")
    lines = [
        ComplexLine(GaussianRational(1, 0), GaussianRational(-j, 0), GaussianRational(0, 0))
        for j in range(1, k + 1)
    ]
    return validate_complex_arrangement(lines)
