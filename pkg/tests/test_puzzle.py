from collections import Counter

import pytest

from kpuzzle.algebra import Family, alphabet
from kpuzzle.base_types import InconsistentCardinality
from kpuzzle.puzzle import (
    MODIFIED,
    STANDARD,
    BoundarySpec,
    Orient,
    Puzzle,
    PuzzleDomain,
    Shape,
    Side,
    SideSpec,
    Table,
    encode_boundary,
    enumerate_puzzles,
    half_lozenge_bottom,
    half_lozenge_top,
    weight,
    weight_table,
)
from kpuzzle.young import BoxContext, YoungDiagram, all_diagrams, dual, strip_rel
from tests.utils import diagram

DOMAINS = [
    PuzzleDomain.tri_up(4),
    PuzzleDomain.tri_down(4),
    PuzzleDomain.lozenge(3),
]


def _boundary_edges(domain):
    counts = Counter(edge for cell in domain.cells() for edge in cell.edges())
    return {edge for edge, count in counts.items() if count == 1}


class TestDomain:
    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_cell_counts(self, n):
        assert len(PuzzleDomain.tri_up(n).cells()) == n * n
        assert len(PuzzleDomain.tri_down(n).cells()) == n * n
        assert len(PuzzleDomain.lozenge(n).cells()) == 2 * n * n

    @pytest.mark.parametrize("domain", DOMAINS, ids=str)
    def test_sides_cover_boundary(self, domain):
        covered = [edge for side in domain.sides for edge in domain.side_edges(side)]
        assert all(len(domain.side_edges(side)) == domain.n for side in domain.sides)
        assert len(covered) == len(set(covered))
        assert set(covered) == _boundary_edges(domain)

    @pytest.mark.parametrize("domain", DOMAINS, ids=str)
    def test_positions(self, domain):
        for cell in domain.cells():
            row, col = domain.position(cell)
            assert domain.cell_at(row, col, cell.orient) == cell

    def test_scan_order(self):
        cells = PuzzleDomain.tri_up(3).cells()
        assert cells[0].is_up and (cells[0].p, cells[0].q) == (0, 0)
        levels = [cell.level for cell in cells]
        assert levels == sorted(levels)

    def test_foreign_side(self):
        with pytest.raises(ValueError) as excinfo:
            PuzzleDomain.tri_up(3).side_edges(Side.TOP)
        assert "Invalid side" in str(excinfo.value)

    def test_missing_cell(self):
        with pytest.raises(ValueError):
            PuzzleDomain.tri_up(3).cell_at(1, 2, Orient.UP)

    def test_printing(self):
        assert str(PuzzleDomain.tri_up(5)) == "TriUp(5)"
        assert PuzzleDomain.lozenge(2).shape is Shape.LOZENGE


class TestBoundary:
    def test_reverse_reads_the_dual(self, gr24):
        domain = PuzzleDomain.tri_up(4)
        for lam in all_diagrams(gr24):
            reversed_side = BoundarySpec({Side.LEFT: SideSpec(lam, reverse=True)})
            dual_side = BoundarySpec({Side.LEFT: SideSpec(dual(lam))})
            assert encode_boundary(domain, reversed_side) == encode_boundary(
                domain, dual_side
            )

    def test_states_by_direction(self, gr24):
        domain = PuzzleDomain.tri_up(4)
        lam = diagram("2,1", 2, 4)
        boundary = BoundarySpec(
            {
                Side.LEFT: SideSpec(lam),
                Side.RIGHT: SideSpec(lam),
                Side.BASE: SideSpec(lam),
            }
        )
        states = encode_boundary(domain, boundary)
        assert len(states) == 12
        left = [states[e] for e in domain.side_edges(Side.LEFT)]
        assert [s.short for s in left] == ["E", "G", "E", "G"]

    def test_mixed_boxes(self, gr14, gr24):
        domain = PuzzleDomain.tri_up(4)
        boundary = BoundarySpec(
            {
                Side.LEFT: SideSpec(YoungDiagram.empty(gr24)),
                Side.RIGHT: SideSpec(YoungDiagram.empty(gr14)),
            }
        )
        with pytest.raises(InconsistentCardinality):
            encode_boundary(domain, boundary)

    def test_wrong_size(self, gr24):
        boundary = BoundarySpec({Side.LEFT: SideSpec(YoungDiagram.empty(gr24))})
        with pytest.raises(InconsistentCardinality):
            encode_boundary(PuzzleDomain.tri_up(5), boundary)

    def test_no_diagram(self):
        with pytest.raises(InconsistentCardinality):
            BoundarySpec().context(3)


class TestEnumeration:
    def _square_products(self, gr24):
        box = diagram("1", 2, 4)
        boundary = BoundarySpec({Side.LEFT: SideSpec(box), Side.RIGHT: SideSpec(box)})
        return PuzzleDomain.tri_up(4), boundary

    def test_box_times_box(self, gr24):
        domain, boundary = self._square_products(gr24)
        found = enumerate_puzzles(domain, boundary, exclude=(7,))
        bases = sorted(str(p.read_side(Side.BASE)) for p in found)
        assert bases == ["1,1", "2", "2,1"]
        k_tiles = {str(p.read_side(Side.BASE)): p.k_tiles for p in found}
        assert k_tiles == {"2": 0, "1,1": 0, "2,1": 1}

    def test_scan_direction_does_not_matter(self, gr24):
        domain, boundary = self._square_products(gr24)
        forward = enumerate_puzzles(domain, boundary)
        backward = enumerate_puzzles(domain, boundary, reverse_scan=True)
        assert len(forward) == len(backward)
        assert set(forward) == set(backward)

    def test_edges_agree(self, gr24):
        domain, boundary = self._square_products(gr24)
        fixed = encode_boundary(domain, boundary)
        for puzzle in enumerate_puzzles(domain, boundary):
            states = puzzle.edge_states()
            assert all(states[edge] == state for edge, state in fixed.items())
            assert puzzle.read_side(Side.LEFT) == diagram("1", 2, 4)
            assert len(puzzle.tiles) == len(domain.cells())

    def test_nonequivariant_puzzles(self, gr24):
        domain, boundary = self._square_products(gr24)
        for puzzle in enumerate_puzzles(domain, boundary, exclude=(7,)):
            assert puzzle.equivariant_rhombi == ()

    def test_printing(self, gr24):
        domain, boundary = self._square_products(gr24)
        text = str(enumerate_puzzles(domain, boundary)[0])
        rows = text.splitlines()
        assert len(rows) == 4
        assert len(rows[-1].split()) == 7

    def test_midline_needs_lozenge(self, gr24):
        domain, boundary = self._square_products(gr24)
        with pytest.raises(ValueError):
            enumerate_puzzles(domain, boundary)[0].midline()


class TestWeights:
    def test_tables(self):
        standard = weight_table(Table.STANDARD)
        modified = weight_table(Table.MODIFIED)
        assert set(standard) == set(modified)
        assert standard[(8, 4)] == (0, -1)
        assert modified[(8, 4)] == (-1, 0)
        assert standard[(7, 7)] == modified[(7, 7)] == (1, -1)
        assert standard[(3, 1)] == (0, 1) and standard[(1, 3)] == (1, 0)
        assert modified[(3, 1)] == (1, 0) and modified[(1, 3)] == (0, 1)

    def test_indices(self):
        assert STANDARD.indices(1, 2, 5) == (3, 2)
        assert MODIFIED.indices(0, 0, 4) == (4, 1)

    def test_wrong_alphabet(self, gr24):
        box = diagram("1", 2, 4)
        boundary = BoundarySpec({Side.LEFT: SideSpec(box), Side.RIGHT: SideSpec(box)})
        puzzle = enumerate_puzzles(PuzzleDomain.tri_up(4), boundary)[0]
        with pytest.raises(ValueError):
            weight(puzzle, STANDARD, alphabet(Family.Y, 3), alphabet(Family.Y, 4))


@pytest.fixture(
    params=[(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)], ids=lambda kn: f"Gr{kn}"
)
def box(request):
    return BoxContext(*request.param)


class TestHalfLozenges:
    @pytest.mark.parametrize("k, n", [(1, 3), (2, 4)])
    def test_weighted_midline_is_single_coloured(self, k, n):
        ctx = BoxContext(k, n)
        y = alphabet(Family.Y, n)
        weighted = 0
        for lam in all_diagrams(ctx):
            for mu in all_diagrams(ctx):
                boundary = BoundarySpec(
                    {Side.LOWER_LEFT: SideSpec(lam), Side.LOWER_RIGHT: SideSpec(mu)}
                )
                for puzzle in enumerate_puzzles(PuzzleDomain.lozenge(n), boundary):
                    if weight(puzzle, STANDARD, y, y).is_zero():
                        continue
                    weighted += 1
                    line = puzzle.midline()
                    assert len(line) == n and set(line) <= {"R", "G"}, line
        assert weighted > 0

    def test_top_with_empty_left(self, box):
        z = alphabet(Family.Z, box.n)
        for mu in all_diagrams(box):
            found = half_lozenge_top(YoungDiagram.empty(box), mu)
            assert len(found) == 1
            puzzle, sigma = found[0]
            assert sigma == mu
            assert weight(puzzle, STANDARD, z, z) == 1

    def test_top_with_empty_right(self, box):
        z = alphabet(Family.Z, box.n)
        for lam in all_diagrams(box):
            found = half_lozenge_top(lam, YoungDiagram.empty(box))
            assert len(found) == 1
            puzzle, sigma = found[0]
            assert sigma == lam
            assert weight(puzzle, STANDARD, z, z) == 1

    def test_bottom_with_empty_rho(self, box):
        n, k = box.n, box.k
        z = alphabet(Family.Z, n)
        for sigma in all_diagrams(box):
            found = half_lozenge_bottom(sigma, rho=YoungDiagram.empty(box))
            nus = [nu for _, nu, _ in found]
            expected = [nu for nu in all_diagrams(box) if strip_rel(dual(sigma), nu)]
            assert sorted(nus, key=lambda d: d.frame) == expected
            scale = 1
            for i in sigma.frame:
                scale = scale * z[i - 1]
            for i in range(n - k + 1, n + 1):
                scale = scale / z[i - 1]
            for puzzle, nu, _ in found:
                sign = (-1) ** (dual(sigma).size - nu.size)
                assert weight(puzzle, STANDARD, z, z) == sign * scale


def test_puzzles_are_values(gr24):
    box = diagram("1", 2, 4)
    boundary = BoundarySpec({Side.LEFT: SideSpec(box), Side.RIGHT: SideSpec(box)})
    first = enumerate_puzzles(PuzzleDomain.tri_up(4), boundary)
    second = enumerate_puzzles(PuzzleDomain.tri_up(4), boundary)
    assert first == second
    assert isinstance(first[0], Puzzle)
