"""Complex lines, circles on the 3-sphere, divides, and the lift identity."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from kleinlinks import (
    CircleParam,
    ComplexLine,
    Divide,
    GaussianRational,
    RealLine,
    acampo_link,
    circle_at_infinity,
    classify_complex_pair,
    complexify,
    complexify_arrangement,
    divide_of,
    hopf_arrangement,
    linking_matrix_combinatorial,
    tangent_lift,
    validate_arrangement,
    validate_complex_arrangement,
)
from kleinlinks.errors import (
    BadK,
    DuplicateLine,
    IdenticalLines,
    MissesBall,
    NotConnected,
    NotGeneralPosition,
    ParallelPair,
)

from test_lines import square_lines


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


class TestComplexify:
    def test_horizontal_axis(self):
        cl = complexify(RealLine(0, 1, 0))
        assert cl.alpha == gr(0) and cl.beta == gr(1) and cl.gamma == gr(0)

    def test_vertical_half(self):
        cl = complexify(RealLine(1, 0, Fraction(1, 2)))
        # Canonical integer form of x=1/2 is 2x=1; leading-1 form is (1,0,1/2).
        assert cl.alpha == gr(1) and cl.beta == gr(0) and cl.gamma == gr(1, 0) / 2

    def test_diagonal(self):
        cl = complexify(RealLine(1, 1, Fraction(69, 50)))
        assert cl.alpha == gr(1) and cl.beta == gr(1)
        assert cl.gamma == gr(Fraction(69, 50))

    def test_real_trace_round_trip(self):
        for ln in square_lines() + [RealLine(3, -5, Fraction(2, 7))]:
            assert complexify(ln).real_trace() == ln


class TestCanonicalForm:
    def test_leading_one(self):
        cl = ComplexLine(gr(0, 2), gr(4), gr(2, 2))
        assert cl.alpha == gr(1)
        # (4)/(2i) = -2i; (2+2i)/(2i) = 1 - i.
        assert cl.beta == gr(0, -2)
        assert cl.gamma == gr(1, -1)

    def test_scaled_lines_equal(self):
        l1 = ComplexLine(gr(1), gr(0, 1), gr(Fraction(1, 3)))
        l2 = ComplexLine(gr(2, 2), gr(-2, 2), gr(Fraction(2, 3), Fraction(2, 3)))
        assert l1 == l2

    def test_meets_ball(self):
        assert ComplexLine(gr(1), gr(0), gr(Fraction(1, 2))).meets_ball()
        assert not ComplexLine(gr(1), gr(0), gr(1)).meets_ball()
        assert not ComplexLine(gr(1), gr(0), gr(2)).meets_ball()


class TestClassifyComplexPair:
    def test_axes_concurrent_at_origin(self):
        z_axis = ComplexLine(gr(1), gr(0), gr(0))
        w_axis = ComplexLine(gr(0), gr(1), gr(0))
        pc = classify_complex_pair(z_axis, w_axis)
        assert pc.is_concurrent()
        assert pc.point == (gr(0), gr(0))

    def test_affinely_parallel(self):
        l1 = complexify(RealLine(1, 0, Fraction(1, 2)))
        l2 = complexify(RealLine(1, 0, Fraction(-1, 2)))
        pc = classify_complex_pair(l1, l2)
        assert pc.is_hyperparallel() and pc.point is None

    def test_real_intersection_outside(self):
        l1 = complexify(RealLine(0, 1, Fraction(9, 10)))
        l2 = complexify(RealLine(1, 1, Fraction(69, 50)))
        pc = classify_complex_pair(l1, l2)
        assert pc.is_hyperparallel() and pc.point is not None

    def test_matches_real_classification(self):
        # Complexification preserves the pair class of real chords.
        arr = validate_arrangement(square_lines())
        for (i, j), pc in arr.pair_classes.items():
            cpc = classify_complex_pair(
                complexify(arr.lines[i]), complexify(arr.lines[j])
            )
            assert cpc.tag == pc.tag

    def test_genuinely_complex_concurrent(self):
        # z = i*w and w = 0 meet only at the origin.
        l1 = ComplexLine(gr(1), gr(0, -1), gr(0))
        l2 = ComplexLine(gr(0), gr(1), gr(0))
        pc = classify_complex_pair(l1, l2)
        assert pc.is_concurrent() and pc.point == (gr(0), gr(0))

    def test_identical_raises(self):
        l1 = ComplexLine(gr(1), gr(0, 1), gr(0))
        l2 = ComplexLine(gr(0, -1), gr(1), gr(0))  # scaled by -i
        with pytest.raises(IdenticalLines):
            classify_complex_pair(l1, l2)


class TestValidation:
    def test_misses_ball_index(self):
        lines = [ComplexLine(gr(1), gr(0), gr(0)), ComplexLine(gr(1), gr(0), gr(3))]
        with pytest.raises(MissesBall) as ei:
            validate_complex_arrangement(lines)
        assert "1" in str(ei.value)

    def test_duplicate(self):
        l1 = ComplexLine(gr(1), gr(0), gr(0))
        with pytest.raises(DuplicateLine):
            validate_complex_arrangement([l1, ComplexLine(gr(2), gr(0), gr(0))])

    def test_parallel_pair_rejected(self):
        # Complexifications of chords meeting exactly on the unit circle.
        l1 = complexify(RealLine(0, 1, 0))
        l2 = complexify(RealLine(1, 1, 1))  # meet at (1, 0)
        with pytest.raises(ParallelPair):
            validate_complex_arrangement([l1, l2])


class TestLinkingMatrixCombinatorial:
    def test_square_four_cycle(self):
        arr = complexify_arrangement(validate_arrangement(square_lines()))
        m = linking_matrix_combinatorial(arr)
        assert m == [
            [0, 1, 0, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [1, 0, 1, 0],
        ]

    def test_two_axes(self):
        arr = complexify_arrangement(validate_arrangement([RealLine(1, 0, 0), RealLine(0, 1, 0)]))
        assert linking_matrix_combinatorial(arr) == [[0, 1], [1, 0]]

    def test_disjoint_pair(self):
        arr = complexify_arrangement(
            validate_arrangement(
                [RealLine(1, 0, Fraction(1, 2)), RealLine(1, 0, Fraction(-1, 2))]
            )
        )
        assert linking_matrix_combinatorial(arr) == [[0, 0], [0, 0]]


class TestHopfArrangement:
    def test_k1_unknot_circle(self):
        arr = hopf_arrangement(1)
        assert arr.k == 1
        c = circle_at_infinity(arr.lines[0])
        pts = c.eval(np.linspace(0.0, 2 * math.pi, 17))
        assert np.max(np.abs(np.sum(np.abs(pts) ** 2, axis=0) - 1.0)) < 1e-12

    def test_k2_concurrent(self):
        arr = hopf_arrangement(2)
        assert arr.pair(0, 1).is_concurrent()

    def test_k3_all_pairs_linked(self):
        arr = hopf_arrangement(3)
        m = linking_matrix_combinatorial(arr)
        assert m == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_bad_k(self):
        with pytest.raises(BadK):
            hopf_arrangement(0)


def sphere_and_line_residuals(line: ComplexLine, n=64):
    c = circle_at_infinity(line)
    thetas = np.arange(n) * (2 * math.pi / n)
    pts = c.eval(thetas)
    sphere = np.abs(np.sum(np.abs(pts) ** 2, axis=0) - 1.0)
    al, be, ga = complex(line.alpha), complex(line.beta), complex(line.gamma)
    on_line = np.abs(al * pts[0] + be * pts[1] - ga)
    return float(np.max(sphere)), float(np.max(on_line))


class TestCircleAtInfinity:
    def test_horizontal_axis_great_circle(self):
        c = circle_at_infinity(complexify(RealLine(0, 1, 0)))
        assert c.foot == (gr(0), gr(0))
        assert c.wsq == 1
        pts = c.eval(np.array([0.0, math.pi / 2]))
        # Points are unit multiples of the direction, second coordinate 0.
        assert np.max(np.abs(pts[1])) < 1e-15
        assert abs(abs(pts[0][0]) - 1.0) < 1e-15

    def test_vertical_half_radius(self):
        c = circle_at_infinity(complexify(RealLine(1, 0, Fraction(1, 2))))
        assert c.foot == (gr(Fraction(1, 2)), gr(0))
        assert c.wsq == Fraction(3, 4)
        pts = c.eval(np.array([0.0, 1.0, 2.5]))
        assert np.max(np.abs(pts[0] - 0.5)) < 1e-15
        assert np.max(np.abs(np.abs(pts[1]) - math.sqrt(3) / 2)) < 1e-15

    def test_diagonal_foot_zero(self):
        c = circle_at_infinity(complexify(RealLine(1, -1, 0)))
        assert c.foot == (gr(0), gr(0))
        assert c.wsq == 1
        pts = c.eval(np.array([0.3, 1.7]))
        assert np.max(np.abs(pts[0] - pts[1])) < 1e-15

    def test_residuals_sample(self):
        lines = [
            complexify(RealLine(0, 1, 0)),
            complexify(RealLine(1, 0, Fraction(1, 2))),
            complexify(RealLine(1, -1, 0)),
            complexify(RealLine(3, -5, Fraction(2, 7))),
            ComplexLine(gr(1), gr(0, -2), gr(Fraction(1, 3), Fraction(1, 5))),
            ComplexLine(gr(0, 1), gr(2, 3), gr(1)),
        ]
        for ln in lines:
            sphere, on_line = sphere_and_line_residuals(ln)
            assert sphere < 1e-12
            assert on_line < 1e-12

    def test_velocity_is_derivative(self):
        c = circle_at_infinity(ComplexLine(gr(1), gr(0, -2), gr(Fraction(1, 3))))
        thetas = np.array([0.1, 2.0, 4.5])
        h = 1e-6
        fd = (c.eval(thetas + h) - c.eval(thetas - h)) / (2 * h)
        assert np.max(np.abs(fd - c.vel(thetas))) < 1e-8

    def test_min_dist2_closed_form(self):
        c = circle_at_infinity(ComplexLine(gr(1), gr(0, -2), gr(Fraction(1, 3))))
        p = np.array([0.0, -1.0j])
        thetas = np.arange(4096) * (2 * math.pi / 4096)
        pts = c.eval(thetas)
        sampled = np.min(np.sum(np.abs(pts - p[:, None]) ** 2, axis=0))
        assert abs(sampled - c.min_dist2_to(p)) < 1e-6


class TestDivide:
    def test_square_counts(self):
        arr = validate_arrangement(square_lines())
        d = divide_of(arr)
        assert isinstance(d, Divide)
        assert d.branch_count == 4
        assert len(d.double_points) == 4
        assert len(d.boundary_points) == 8
        assert all(d.conditions.values())

    def test_single_line(self):
        arr = validate_arrangement([RealLine(0, 1, 0)])
        d = divide_of(arr)
        assert d.branch_count == 1
        assert len(d.double_points) == 0
        assert len(d.boundary_points) == 2

    def test_not_connected(self):
        arr = validate_arrangement(
            [RealLine(1, 0, Fraction(1, 2)), RealLine(1, 0, Fraction(-1, 2))]
        )
        with pytest.raises(NotConnected):
            divide_of(arr)

    def test_not_general_position(self):
        arr = validate_arrangement(
            [RealLine(1, 0, 0), RealLine(0, 1, 0), RealLine(1, 1, 0)]
        )
        with pytest.raises(NotGeneralPosition):
            divide_of(arr)

    def test_boundary_point_floats_on_circle(self):
        arr = validate_arrangement(square_lines())
        d = divide_of(arr)
        for bp in d.boundary_points:
            x, y = bp.floats()
            assert abs(x * x + y * y - 1.0) < 1e-12


class TestAcampoLink:
    def test_square_identity_64_samples(self):
        arr = validate_arrangement(square_lines())
        circles = acampo_link(divide_of(arr), arr)
        assert len(circles) == 4
        thetas = np.arange(64) * (2 * math.pi / 64)
        for ln, c in zip(arr.lines, circles):
            lift = tangent_lift(ln, thetas)
            assert np.max(np.abs(lift - c.eval(thetas))) < 1e-12

    def test_horizontal_axis_identity(self):
        ln = RealLine(0, 1, 0)
        arr = validate_arrangement([ln])
        (c,) = acampo_link(divide_of(arr), arr)
        thetas = np.arange(64) * (2 * math.pi / 64)
        lift = tangent_lift(ln, thetas)
        assert np.max(np.abs(lift - c.eval(thetas))) < 1e-12
        # x = (t, 0), u = (+-sqrt(1-t^2), 0): first coordinate unit, second 0.
        assert np.max(np.abs(lift[1])) < 1e-15
        assert np.max(np.abs(np.abs(lift[0]) - 1.0)) < 1e-12

    def test_identity_on_skew_arrangement(self):
        arr = validate_arrangement(
            [RealLine(1, 0, 0), RealLine(1, 2, Fraction(1, 3)), RealLine(2, -1, Fraction(1, 5))]
        )
        circles = acampo_link(divide_of(arr), arr)
        thetas = np.arange(64) * (2 * math.pi / 64)
        for ln, c in zip(arr.lines, circles):
            assert np.max(np.abs(tangent_lift(ln, thetas) - c.eval(thetas))) < 1e-12

    def test_two_concurrent_lines_give_two_circles(self):
        arr = validate_arrangement([RealLine(1, 0, 0), RealLine(0, 1, 0)])
        circles = acampo_link(divide_of(arr), arr)
        assert len(circles) == 2
        carr = complexify_arrangement(arr)
        assert linking_matrix_combinatorial(carr) == [[0, 1], [1, 0]]
