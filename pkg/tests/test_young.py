from math import comb

import pytest

from kpuzzle.young import (
    BoxContext,
    YoungDiagram,
    all_diagrams,
    all_frames,
    conjugate,
    contains,
    diagram_of_frame,
    dual,
    frame_of,
    parse_partition,
    stats,
    strip_neighbours,
    strip_rel,
)
from tests.utils import diagram


class TestFrames:
    def test_frame_and_stats(self):
        lam = diagram("5,3,3,1", 5, 10)
        assert lam.frame == (1, 3, 6, 7, 10)
        assert stats(lam) == (12, 5, 4)

    def test_frame_round_trip(self, gr24):
        for lam in all_diagrams(gr24):
            assert diagram_of_frame(lam.frame, gr24) == lam

    @pytest.mark.parametrize("n", range(1, 9))
    def test_frame_round_trip_up_to_eight(self, n):
        for k in range(1, n + 1):
            ctx = BoxContext(k, n)
            frames = list(all_frames(ctx))
            assert len(frames) == comb(n, k)
            for frame in frames:
                lam = diagram_of_frame(frame, ctx)
                assert frame_of(lam) == frame
                assert diagram_of_frame(frame_of(lam), ctx) == lam

    def test_empty_and_full(self, gr25):
        assert YoungDiagram.empty(gr25).frame == (1, 2)
        assert YoungDiagram.full(gr25).frame == (4, 5)

    def test_count(self, gr25):
        assert len(all_diagrams(gr25)) == 10
        assert all_diagrams(gr25)[0] == YoungDiagram.empty(gr25)

    def test_invalid_frame(self, gr24):
        with pytest.raises(ValueError) as excinfo:
            diagram_of_frame((2, 2), gr24)
        assert "Invalid frame" in str(excinfo.value)


class TestDual:
    def test_dual(self):
        assert dual(diagram("5,3,3,1", 5, 10)) == diagram("5,4,2,2", 5, 10)

    def test_involution(self, gr25):
        for lam in all_diagrams(gr25):
            assert dual(dual(lam)) == lam
            assert lam.size + dual(lam).size == gr25.area


class TestStripRelation:
    @pytest.mark.parametrize(
        "lam,mu,expected",
        [
            ("2,1", "1", True),
            ("2", "1", True),
            ("2", "", False),
            ("1,1", "", False),
            ("1", "", True),
            ("1", "1", True),
            ("2,2", "1", False),
        ],
    )
    def test_gr24(self, gr24, lam, mu, expected):
        left, right = parse_partition(lam, gr24), parse_partition(mu, gr24)
        assert strip_rel(left, right) is expected

    @pytest.mark.parametrize(
        "mu",
        [
            "5,3,3,1",
            "4,3,3,1",
            "5,3,2,1",
            "5,3,3",
            "4,3,2,1",
            "4,3,3",
            "5,3,2",
            "4,3,2",
        ],
    )
    def test_removing_marked_corners(self, mu):
        # any subset of the corners ending rows 1, 3 and 4
        assert strip_rel(diagram("5,3,3,1", 5, 10), diagram(mu, 5, 10))

    @pytest.mark.parametrize("mu", ["3,3,3,1", "5,2,2,1", "5,3,3,1,1"])
    def test_not_a_strip_of_the_marked_diagram(self, mu):
        assert not strip_rel(diagram("5,3,3,1", 5, 10), diagram(mu, 5, 10))

    def test_neighbours_of_empty(self, gr24):
        assert strip_neighbours(YoungDiagram.empty(gr24)) == [
            YoungDiagram.empty(gr24),
            diagram("1", 2, 4),
        ]

    def test_neighbours_agree_with_relation(self, gr25):
        for mu in all_diagrams(gr25):
            expected = [nu for nu in all_diagrams(gr25) if strip_rel(nu, mu)]
            assert strip_neighbours(mu) == expected

    def test_different_boxes(self, gr24, gr25):
        with pytest.raises(ValueError):
            strip_rel(YoungDiagram.empty(gr24), YoungDiagram.empty(gr25))


class TestPartitions:
    def test_parse(self, gr24):
        assert parse_partition("2,1", gr24).rows == (2, 1)
        assert parse_partition("2,0", gr24).rows == (2,)
        for literal in ("", "0", "-", "∅"):
            assert parse_partition(literal, gr24) == YoungDiagram.empty(gr24)

    def test_does_not_fit(self, gr24):
        with pytest.raises(ValueError) as excinfo:
            parse_partition("3", gr24)
        assert "does not fit" in str(excinfo.value)

    def test_not_a_partition(self, gr24):
        with pytest.raises(ValueError) as excinfo:
            parse_partition("1,2", gr24)
        assert "Invalid partition" in str(excinfo.value)

    def test_bad_literal(self, gr24):
        with pytest.raises(ValueError):
            parse_partition("a,b", gr24)

    def test_contains_and_conjugate(self, gr25):
        lam = diagram("3,1", 2, 5)
        assert contains(lam, diagram("2,1", 2, 5))
        assert not contains(lam, diagram("2,2", 2, 5))
        assert conjugate(lam) == (2, 1, 1)

    def test_printing(self, gr24):
        assert str(YoungDiagram.empty(gr24)) == "∅"
        assert diagram("2,1", 2, 4).slug() == "2-1"
        assert str(gr24) == "Gr(2,4)"

    def test_invalid_box(self):
        with pytest.raises(ValueError):
            BoxContext(3, 2)
