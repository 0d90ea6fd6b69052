"""Exact-geometry core: pair classification, validation, combinatorics."""

from fractions import Fraction

import pytest

from kleinlinks import (
    RealLine,
    classify_pair,
    validate_arrangement,
    is_general_position,
    connected_components,
    is_connected,
    is_essentially_affine,
)
from kleinlinks.errors import (
    DuplicateLine,
    IdenticalLines,
    MissesDisk,
    ParallelPair,
)


def square_lines():
    # labels 1: x=1/2, 2: y=1/2, 3: x=-1/2, 4: y=-1/2
    return [
        RealLine(1, 0, Fraction(1, 2)),
        RealLine(0, 1, Fraction(1, 2)),
        RealLine(1, 0, Fraction(-1, 2)),
        RealLine(0, 1, Fraction(-1, 2)),
    ]


class TestClassifyPair:
    def test_axes_concurrent_origin(self):
        pc = classify_pair(RealLine(0, 1, 0), RealLine(1, 0, 0))
        assert pc.is_concurrent()
        assert pc.point == (Fraction(0), Fraction(0))

    def test_boundary_meeting_is_parallel(self):
        # y=0 and y=x-1 meet at (1,0), squared norm exactly 1
        pc = classify_pair(RealLine(0, 1, 0), RealLine(1, -1, 1))
        assert pc.is_parallel()

    def test_affinely_parallel_is_hyperparallel(self):
        pc = classify_pair(
            RealLine(1, 0, Fraction(1, 2)), RealLine(1, 0, Fraction(-1, 2))
        )
        assert pc.is_hyperparallel()
        assert pc.point is None

    def test_outside_intersection_exact(self):
        # y=9/10 and x+y=69/50 meet at (12/25, 9/10), norm^2 = 2601/2500 > 1
        pc = classify_pair(
            RealLine(0, 1, Fraction(9, 10)), RealLine(1, 1, Fraction(69, 50))
        )
        assert pc.is_hyperparallel()
        assert pc.point == (Fraction(12, 25), Fraction(9, 10))
        x, y = pc.point
        assert x * x + y * y == Fraction(2601, 2500)

    def test_identical_lines_rejected(self):
        with pytest.raises(IdenticalLines):
            classify_pair(RealLine(2, 0, 1), RealLine(1, 0, Fraction(1, 2)))

    def test_symmetry(self):
        l1, l2 = RealLine(1, 2, Fraction(1, 3)), RealLine(3, -1, Fraction(1, 7))
        p12, p21 = classify_pair(l1, l2), classify_pair(l2, l1)
        assert p12.tag == p21.tag and p12.point == p21.point


class TestValidate:
    def test_square(self):
        arr = validate_arrangement(square_lines())
        assert arr.k == 4
        assert arr.n_nodes == 4
        assert all(nd.degree == 2 for nd in arr.nodes)
        pts = {nd.point for nd in arr.nodes}
        h = Fraction(1, 2)
        assert pts == {(h, h), (h, -h), (-h, h), (-h, -h)}

    def test_parallel_pair_rejected(self):
        with pytest.raises(ParallelPair) as ei:
            validate_arrangement([RealLine(0, 1, 0), RealLine(1, -1, 1)])
        assert (ei.value.i, ei.value.j) == (0, 1)

    def test_misses_disk(self):
        with pytest.raises(MissesDisk):
            validate_arrangement([RealLine(1, 0, 2)])

    def test_duplicate(self):
        with pytest.raises(DuplicateLine):
            validate_arrangement([RealLine(1, 0, 0), RealLine(-2, 0, 0)])

    def test_node_pair_count_identity(self):
        # sum over nodes of C(deg,2) = number of concurrent pairs
        arr = validate_arrangement(
            [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0),
             RealLine(1, 0, Fraction(1, 2))]
        )
        conc = len(arr.concurrent_pairs())
        agg = sum(nd.degree * (nd.degree - 1) // 2 for nd in arr.nodes)
        assert conc == agg


class TestPredicates:
    def test_general_position(self):
        assert is_general_position(validate_arrangement(square_lines()))
        pencil = validate_arrangement(
            [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0)]
        )
        assert not is_general_position(pencil)
        assert is_general_position(validate_arrangement([RealLine(0, 1, 0)]))

    def test_components(self):
        assert connected_components(validate_arrangement(square_lines())) == [
            [0, 1, 2, 3]
        ]
        two = validate_arrangement(
            [RealLine(1, 0, Fraction(1, 2)), RealLine(1, 0, Fraction(-1, 2))]
        )
        assert connected_components(two) == [[0], [1]]
        assert not is_connected(two)
        assert is_connected(validate_arrangement([RealLine(0, 1, 0)]))

    def test_essentially_affine(self):
        assert is_essentially_affine(validate_arrangement(square_lines()))
        arr = validate_arrangement(
            [RealLine(1, 0, 0), RealLine(1, -1, 0),
             RealLine(0, 1, Fraction(9, 10)), RealLine(1, 1, Fraction(69, 50))]
        )
        assert not is_essentially_affine(arr)
        assert is_essentially_affine(validate_arrangement([RealLine(0, 1, 0)]))

    def test_essential_affine_scaling_invariance(self):
        # shrinking every constant toward the origin preserves all pair classes
        arr = validate_arrangement(square_lines())
        for lam in (Fraction(99, 100), Fraction(9, 10)):
            scaled = validate_arrangement(
                [RealLine(ln.a, ln.b, ln.c * lam) for ln in arr.lines]
            )
            assert is_essentially_affine(scaled) == is_essentially_affine(arr)
            for key in arr.pair_classes:
                assert arr.pair_classes[key].tag == scaled.pair_classes[key].tag
