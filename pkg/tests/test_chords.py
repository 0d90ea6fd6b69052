"""Boundary words, equivalence, faces, perturbation."""

from fractions import Fraction

import pytest

from kleinlinks import (
    ChordDiagram,
    RealLine,
    bounded_faces,
    chord_diagram,
    chord_diagrams_equivalent,
    chord_separates,
    dual_graph,
    face_traversal_bounded_faces,
    labels_interleave,
    perturb_general,
    validate_arrangement,
    is_general_position,
    connected_components,
)
from kleinlinks.errors import LengthMismatch, NotGeneralPosition

from test_lines import square_lines


class TestChordDiagram:
    def test_square_word_matches_frozen_cyclic_order(self):
        arr = validate_arrangement(square_lines())
        d = chord_diagram(arr)
        # Frozen boundary word (read off starting from the -60 degree
        # endpoint); stored word may start anywhere on the circle.
        assert d == ChordDiagram([1, 4, 2, 1, 3, 2, 4, 3])

    def test_square_word_starts_at_smallest_angle(self):
        arr = validate_arrangement(square_lines())
        # smallest angle among the 8 endpoints is 30 degrees: line 2's
        # endpoint (sqrt3/2, 1/2)
        assert chord_diagram(arr).word == (2, 1, 3, 2, 4, 3, 1, 4)

    def test_single_line(self):
        arr = validate_arrangement([RealLine(0, 1, 0)])
        assert chord_diagram(arr).word == (1, 1)

    def test_crossing_pair_interleaves(self):
        arr = validate_arrangement([RealLine(1, 0, 0), RealLine(0, 1, 0)])
        d = chord_diagram(arr)
        assert d == ChordDiagram([1, 2, 1, 2])

    def test_interleaving_iff_concurrent(self):
        lines = [
            RealLine(1, 0, Fraction(1, 2)),
            RealLine(0, 1, Fraction(1, 2)),
            RealLine(1, 1, 0),
            RealLine(1, -3, Fraction(1, 5)),
        ]
        arr = validate_arrangement(lines)
        d = chord_diagram(arr)
        for i in range(arr.k):
            for j in range(i + 1, arr.k):
                inter = labels_interleave(d, i + 1, j + 1)
                assert inter == arr.pair(i, j).is_concurrent()


class TestEquivalence:
    def test_rotation(self):
        assert chord_diagrams_equivalent(
            ChordDiagram([1, 2, 1, 2]), ChordDiagram([2, 1, 2, 1])
        )

    def test_interleaving_invariant(self):
        assert not chord_diagrams_equivalent(
            ChordDiagram([1, 1, 2, 2]), ChordDiagram([1, 2, 1, 2])
        )

    def test_reflection_and_relabel(self):
        d1 = ChordDiagram([1, 2, 3, 1, 2, 3])
        d2 = ChordDiagram([3, 2, 1, 3, 2, 1])
        assert chord_diagrams_equivalent(d1, d2)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            chord_diagrams_equivalent(
                ChordDiagram([1, 1]), ChordDiagram([1, 2, 1, 2])
            )

    def test_separation_predicate(self):
        # word a m b m: m's endpoints separate a's pair from b's pair
        d = ChordDiagram([1, 1, 2, 3, 3, 2])
        # chord 2's endpoints enclose chord 3 entirely, and chord 1 lies
        # entirely on the other arc
        assert chord_separates(d, 2, 1, 3)
        assert not chord_separates(d, 1, 2, 3)
        dd = ChordDiagram([1, 2, 1, 2])
        assert not chord_separates(dd, 1, 2, 2)


class TestFaces:
    def test_square(self):
        arr = validate_arrangement(square_lines())
        assert bounded_faces(arr) == 1
        assert face_traversal_bounded_faces(arr) == 1

    def test_single_line(self):
        arr = validate_arrangement([RealLine(0, 1, 0)])
        assert bounded_faces(arr) == 0
        assert face_traversal_bounded_faces(arr) == 0

    def test_disconnected(self):
        arr = validate_arrangement(
            [RealLine(1, 0, Fraction(1, 2)), RealLine(1, 0, Fraction(-1, 2))]
        )
        assert bounded_faces(arr) == 0
        assert face_traversal_bounded_faces(arr) == 0

    def test_triangle(self):
        arr = validate_arrangement(
            [RealLine(0, 1, Fraction(1, 4)),
             RealLine(1, -1, Fraction(1, 4)),
             RealLine(1, 1, Fraction(-1, 4))]
        )
        assert is_general_position(arr)
        assert arr.n_nodes == 3
        assert bounded_faces(arr) == 1
        assert face_traversal_bounded_faces(arr) == 1

    def test_not_general_position(self):
        pencil = validate_arrangement(
            [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0)]
        )
        with pytest.raises(NotGeneralPosition):
            bounded_faces(pencil)


class TestDualGraph:
    def test_square_cycle(self):
        g = dual_graph(validate_arrangement(square_lines()))
        assert sorted(g.degree_sequence()) == [2, 2, 2, 2]
        assert not g.is_line_tree

    def test_path(self):
        arr = validate_arrangement(
            [RealLine(1, 0, 0), RealLine(0, 1, Fraction(1, 2)),
             RealLine(0, 1, Fraction(-1, 2))]
        )
        g = dual_graph(arr)
        assert len(g.edges) == 2
        assert g.is_line_tree

    def test_single_line(self):
        g = dual_graph(validate_arrangement([RealLine(0, 1, 0)]))
        assert g.edges == ()
        assert g.is_line_tree


class TestPerturb:
    def test_identity_when_generic(self):
        arr = validate_arrangement(square_lines())
        assert perturb_general(arr, seed=1) is arr

    def test_three_line_pencil(self):
        pencil = validate_arrangement(
            [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0)]
        )
        out = perturb_general(pencil, seed=1)
        assert is_general_position(out)
        assert out.n_nodes == 3
        assert all(nd.degree == 2 for nd in out.nodes)
        assert chord_diagram(out) == chord_diagram(pencil)
        assert connected_components(out) == connected_components(pencil)

    def test_four_line_pencil(self):
        pencil = validate_arrangement(
            [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0),
             RealLine(1, 0, 0)]
        )
        out = perturb_general(pencil, seed=7)
        assert is_general_position(out)
        assert out.n_nodes == 6
        assert connected_components(out) == [[0, 1, 2, 3]]
        assert chord_diagram(out) == chord_diagram(pencil)

    def test_deterministic(self):
        pencil = validate_arrangement(
            [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0)]
        )
        a = perturb_general(pencil, seed=3)
        b = perturb_general(pencil, seed=3)
        assert [(l.a, l.b, l.c) for l in a.lines] == [
            (l.a, l.b, l.c) for l in b.lines
        ]

    def test_pair_classes_preserved(self):
        lines = [RealLine(0, 1, 0), RealLine(1, -1, 0), RealLine(1, 1, 0),
                 RealLine(1, 0, Fraction(4, 5))]
        arr = validate_arrangement(lines)
        out = perturb_general(arr, seed=11)
        for key, pc in arr.pair_classes.items():
            assert out.pair_classes[key].tag == pc.tag
