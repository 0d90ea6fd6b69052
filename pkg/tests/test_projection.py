"""Generic projections of sphere links and their combinatorial diagrams."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from kleinlinks import (
    circle_at_infinity,
    complexify_arrangement,
    diagram_linking_matrix,
    hopf_arrangement,
    linking_matrix_combinatorial,
    linking_number,
    linking_number_int,
    project_diagram,
    validate_arrangement,
)
from kleinlinks.errors import ToleranceViolation
from kleinlinks.lines import RealLine

from test_lines import square_lines


def ring(n=60, axis="z", center=(0.0, 0.0, 0.0), reverse=False):
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    if axis == "z":
        pts = np.column_stack([np.cos(t), np.sin(t), np.zeros_like(t)])
    else:
        pts = np.column_stack([np.cos(t), np.zeros_like(t), np.sin(t)])
    pts = pts + np.asarray(center)
    return pts[::-1] if reverse else pts


def arrangement_diagram(arr, seed=0):
    curves = [circle_at_infinity(l) for l in arr.lines]
    return project_diagram(curves, seed=seed)


class TestLinkingNumber:
    def test_split_rings(self):
        assert abs(linking_number(ring(), ring(center=(5, 0, 0)))) < 1e-12

    def test_hopf_rings(self):
        # xy-ring through the xz-ring centred on its rim.
        lk = linking_number(ring(axis="z"), ring(axis="x", center=(1, 0, 0)))
        assert abs(lk - (-1.0)) < 1e-9

    def test_orientation_reversal_flips_sign(self):
        a, b = ring(axis="z"), ring(axis="x", center=(1, 0, 0))
        assert abs(linking_number(a[::-1], b) - 1.0) < 1e-9

    def test_coarse_polygon_same_integer(self):
        # The solid-angle sum is exact per polygon, so decimation keeps the
        # integer (the polygons stay isotopic to the round rings).
        a, b = ring(axis="z"), ring(axis="x", center=(1, 0, 0))
        assert linking_number_int(a[::10], b) == -1
        assert linking_number_int(a, b[::6]) == -1

    def test_int_rejects_far_residual(self):
        with pytest.raises(ValueError):
            linking_number(np.zeros((2, 3)), ring())


class TestHopfDiagrams:
    def test_single_fiber_is_crossingless(self):
        diag = arrangement_diagram(hopf_arrangement(1))
        assert diag.n_components == 1
        assert diag.crossing_count == 0
        assert diag.pd_text() == ""
        assert diag.gauss_code() == ""

    def test_two_fibers_two_positive_crossings(self):
        diag = arrangement_diagram(hopf_arrangement(2))
        assert diag.crossing_count == 2
        assert all(x.sign == 1 for x in diag.crossings)
        assert all(x.ci != x.cj for x in diag.crossings)
        assert diagram_linking_matrix(diag) == [[0, 1], [1, 0]]

    def test_three_fibers(self):
        arr = hopf_arrangement(3)
        diag = arrangement_diagram(arr)
        assert diag.crossing_count == 6
        ones = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        assert diagram_linking_matrix(diag) == ones
        assert linking_matrix_combinatorial(arr) == ones


class TestSquareDiagram:
    def test_crossings_and_linking(self):
        arr = complexify_arrangement(validate_arrangement(square_lines()))
        diag = arrangement_diagram(arr)
        assert diag.n_components == 4
        assert diag.crossing_count >= 8
        # Perpendicular sides are concurrent, opposite sides hyperparallel:
        # the linking graph is the 4-cycle 1-2-3-4-1 in the side labelling.
        cycle = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
        assert diagram_linking_matrix(diag) == cycle
        assert linking_matrix_combinatorial(arr) == cycle


class TestDiagramStructure:
    def setup_method(self):
        self.diag = arrangement_diagram(hopf_arrangement(3))

    def test_over_flag_matches_depths(self):
        for x in self.diag.crossings:
            assert x.over == (0 if x.depth_i > x.depth_j else 1)
            assert abs(x.depth_i - x.depth_j) > self.diag.tol

    def test_pd_labels_each_arc_twice(self):
        code = self.diag.pd_code()
        labels = [a for quad in code for a in quad]
        n = 2 * self.diag.crossing_count
        assert sorted(set(labels)) == list(range(1, n + 1))
        for a in range(1, n + 1):
            assert labels.count(a) == 2

    def test_pd_text_shape(self):
        lines = self.diag.pd_text().splitlines()
        assert len(lines) == self.diag.crossing_count
        assert all(ln.startswith("X[") and ln.endswith("]") for ln in lines)

    def test_gauss_code_pairs_over_and_under(self):
        tokens = self.diag.gauss_code().split()
        assert len(tokens) == 2 * self.diag.crossing_count
        for idx in range(1, self.diag.crossing_count + 1):
            mine = [t for t in tokens if t[1:-1] == str(idx)]
            assert len(mine) == 2
            assert {t[0] for t in mine} == {"O", "U"}
            assert len({t[-1] for t in mine}) == 1

    def test_gauss_code_one_line_per_component(self):
        assert len(self.diag.gauss_code().splitlines()) == self.diag.n_components

    def test_self_crossings_absent_for_fibers(self):
        for i in range(self.diag.n_components):
            assert self.diag.self_crossings(i) == []


class TestDeterminism:
    def test_same_seed_same_diagram(self):
        arr = hopf_arrangement(3)
        d1, d2 = arrangement_diagram(arr, seed=7), arrangement_diagram(arr, seed=7)
        assert d1.pd_text() == d2.pd_text()
        for x1, x2 in zip(d1.crossings, d2.crossings):
            assert np.array_equal(x1.pos, x2.pos)
            assert (x1.ti, x1.tj, x1.sign, x1.over) == (x2.ti, x2.tj, x2.sign, x2.over)

    def test_linking_matrix_seed_invariant(self):
        arr = hopf_arrangement(3)
        mats = {
            tuple(map(tuple, diagram_linking_matrix(arrangement_diagram(arr, seed=s))))
            for s in range(5)
        }
        assert len(mats) == 1


class TestDualRouteAgreement:
    def test_pencil_and_generic_arrangements(self):
        slopes = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 3)]
        lines = [
            RealLine(Fraction(a), Fraction(b), Fraction(0)) for a, b in slopes[:4]
        ]
        lines.append(RealLine(Fraction(1), Fraction(3), Fraction(1, 4)))
        arr = complexify_arrangement(validate_arrangement(lines))
        diag = arrangement_diagram(arr, seed=3)
        assert diagram_linking_matrix(diag) == linking_matrix_combinatorial(arr)
