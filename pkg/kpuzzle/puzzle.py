"""
Puzzles: tilings of triangular and lozenge domains by the catalogue tiles.

The triangular lattice is addressed by integer coordinates ``(p, q)``; in the
plane the point ``(p, q)`` sits at ``x = (p - q) / 2`` on the horizontal line
``p + q`` counted downwards. ``up(p, q)`` is the up triangle with apex
``(p, q)`` and ``down(p, q)`` the down triangle right below it; the two form
the elementary lozenge at ``(p, q)``.

Every edge is keyed by its direction and the lattice point it starts from::

    up(p, q):   left  (DEG60, p, q)   right (DEG120, p, q)   base  (H, p, q)
    down(p, q): top   (H, p, q)       left  (DEG120, p, q+1) right (DEG60, p+1, q)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from kpuzzle.algebra import (
    Alphabet,
    RationalFunction,
    as_rational,
)
from kpuzzle.base_types import EdgeState, InconsistentCardinality
from kpuzzle.vertexmodel import (
    Orientation,
    Rhombus,
    TileCatalogue,
    derive_tiles,
)
from kpuzzle.young import BoxContext, YoungDiagram, diagram_of_frame

__all__ = [
    "EdgeState",
    "Shape",
    "Side",
    "PuzzleDomain",
    "SideSpec",
    "BoundarySpec",
    "Puzzle",
    "WeightScheme",
    "encode_boundary",
    "enumerate_puzzles",
    "weight",
]

log = logging.getLogger(__name__)

E, R, G, RG = EdgeState.EMPTY, EdgeState.RED, EdgeState.GREEN, EdgeState.BOTH


class Direction(Enum):
    H = "h"
    DEG60 = "60"
    DEG120 = "120"


EdgeKey = Tuple[Direction, int, int]

#: states a boundary edge may carry, by direction
BOUNDARY_STATES: Dict[Direction, FrozenSet[EdgeState]] = {
    Direction.H: frozenset((R, G)),
    Direction.DEG60: frozenset((G, E)),
    Direction.DEG120: frozenset((R, E)),
}


class Shape(Enum):
    TRI_UP = "TriUp"
    TRI_DOWN = "TriDown"
    LOZENGE = "Lozenge"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    BASE = "base"
    TOP = "top"
    LOWER_LEFT = "lower_left"
    LOWER_RIGHT = "lower_right"
    UPPER_LEFT = "upper_left"
    UPPER_RIGHT = "upper_right"


#: colour marking a frame position when a side is read in its own direction
RECORDED: Dict[Side, EdgeState] = {
    Side.LEFT: G,
    Side.RIGHT: E,
    Side.BASE: G,
    Side.TOP: G,
    Side.LOWER_LEFT: E,
    Side.LOWER_RIGHT: G,
    Side.UPPER_LEFT: G,
    Side.UPPER_RIGHT: E,
}

SIDES: Dict[Shape, Tuple[Side, ...]] = {
    Shape.TRI_UP: (Side.LEFT, Side.RIGHT, Side.BASE),
    Shape.TRI_DOWN: (Side.LOWER_LEFT, Side.LOWER_RIGHT, Side.TOP),
    Shape.LOZENGE: (
        Side.UPPER_LEFT,
        Side.UPPER_RIGHT,
        Side.LOWER_LEFT,
        Side.LOWER_RIGHT,
    ),
}


class Orient(Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class Cell:
    orient: Orient
    p: int
    q: int

    @property
    def is_up(self) -> bool:
        return self.orient is Orient.UP

    @property
    def level(self) -> int:
        """Index of the horizontal strip holding the cell."""
        return self.p + self.q + (0 if self.is_up else 1)

    def edges(self) -> Tuple[EdgeKey, EdgeKey, EdgeKey]:
        """Edge keys in the order of the tile tables."""
        p, q = self.p, self.q
        if self.is_up:
            return (
                (Direction.DEG60, p, q),
                (Direction.DEG120, p, q),
                (Direction.H, p, q),
            )
        return (
            (Direction.H, p, q),
            (Direction.DEG120, p, q + 1),
            (Direction.DEG60, p + 1, q),
        )


def up(p: int, q: int) -> Cell:
    return Cell(Orient.UP, p, q)


def down(p: int, q: int) -> Cell:
    return Cell(Orient.DOWN, p, q)


def _scan_key(cell: Cell) -> Tuple[int, int]:
    return cell.level, 2 * cell.p - cell.level + (0 if cell.is_up else 1)


@lru_cache(maxsize=None)
def _cells(shape: Shape, n: int) -> Tuple[Cell, ...]:
    found = []
    for p in range(n):
        for q in range(n):
            s = p + q
            if shape is Shape.TRI_UP:
                if s <= n - 1:
                    found.append(up(p, q))
                if s <= n - 2:
                    found.append(down(p, q))
            elif shape is Shape.TRI_DOWN:
                if s >= n:
                    found.append(up(p, q))
                if s >= n - 1:
                    found.append(down(p, q))
            else:
                found.extend((up(p, q), down(p, q)))
    return tuple(sorted(found, key=_scan_key))


@dataclass(frozen=True)
class PuzzleDomain:
    """
    :param shape: triangle pointing up, triangle pointing down or lozenge
    :param n: number of unit edges on each side
    """

    shape: Shape
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Invalid domain size {self.n}")

    @classmethod
    def tri_up(cls, n: int) -> PuzzleDomain:
        return cls(Shape.TRI_UP, n)

    @classmethod
    def tri_down(cls, n: int) -> PuzzleDomain:
        return cls(Shape.TRI_DOWN, n)

    @classmethod
    def lozenge(cls, n: int) -> PuzzleDomain:
        return cls(Shape.LOZENGE, n)

    def cells(self) -> Tuple[Cell, ...]:
        """Cells in scan order: strips from the top, left to right."""
        return _cells(self.shape, self.n)

    def contains(self, cell: Cell) -> bool:
        return cell in set(self.cells())

    @property
    def sides(self) -> Tuple[Side, ...]:
        return SIDES[self.shape]

    @property
    def top_level(self) -> int:
        return self.n if self.shape is Shape.TRI_DOWN else 0

    def position(self, cell: Cell) -> Tuple[int, int]:
        """``(row, col)``, both 1-based, col among cells of the same orientation."""
        s = cell.p + cell.q
        return cell.level - self.top_level + 1, cell.p - max(0, s - (self.n - 1)) + 1

    def cell_at(self, row: int, col: int, orient: Orient) -> Cell:
        for cell in self.cells():
            if cell.orient is orient and self.position(cell) == (row, col):
                return cell
        raise ValueError(f"Invalid cell ({row}, {col}, {orient.value}) of {self}")

    def side_edges(self, side: Side) -> Tuple[EdgeKey, ...]:
        """The ``n`` edges of ``side`` in its reading direction."""
        if side not in self.sides:
            raise ValueError(f"Invalid side {side.value} of {self.shape.value}")
        n = self.n
        positions = range(1, n + 1)
        if side in (Side.LEFT, Side.UPPER_LEFT):
            return tuple(up(0, n - u).edges()[0] for u in positions)
        if side in (Side.RIGHT, Side.UPPER_RIGHT):
            return tuple(up(u - 1, 0).edges()[1] for u in positions)
        if side is Side.BASE:
            return tuple(up(u - 1, n - u).edges()[2] for u in positions)
        if side is Side.TOP:
            return tuple(down(u - 1, n - u).edges()[0] for u in positions)
        if side is Side.LOWER_LEFT:
            return tuple(down(u - 1, n - 1).edges()[1] for u in positions)
        return tuple(down(n - 1, n - u).edges()[2] for u in positions)

    def __str__(self) -> str:
        return f"{self.shape.value}({self.n})"


@dataclass(frozen=True)
class SideSpec:
    """
    :param diagram: the diagram on the side, ``None`` leaves the side free
    :param reverse: read the side against its canonical direction
    """

    diagram: Optional[YoungDiagram] = None
    reverse: bool = False


@dataclass(frozen=True)
class BoundarySpec:
    sides: Mapping[Side, SideSpec] = field(default_factory=dict)

    def spec(self, side: Side) -> SideSpec:
        return self.sides.get(side, SideSpec())

    def context(self, n: int) -> BoxContext:
        """The box shared by every fixed diagram."""
        contexts = {
            s.diagram.context for s in self.sides.values() if s.diagram is not None
        }
        if not contexts:
            raise InconsistentCardinality("Invalid boundary without any diagram")
        if len(contexts) > 1:
            shown = ", ".join(sorted(str(c) for c in contexts))
            raise InconsistentCardinality(f"Invalid boundary mixing {shown}")
        (ctx,) = contexts
        if ctx.n != n:
            raise InconsistentCardinality(
                f"Invalid boundary in {ctx} for a domain of size {n}"
            )
        return ctx


def _other_state(side: Side, direction: Direction) -> EdgeState:
    (other,) = BOUNDARY_STATES[direction] - {RECORDED[side]}
    return other


def _oriented(edges: Sequence[EdgeKey], reverse: bool) -> Sequence[EdgeKey]:
    return tuple(reversed(edges)) if reverse else edges


def encode_boundary(
    domain: PuzzleDomain, boundary: BoundarySpec
) -> Dict[EdgeKey, EdgeState]:
    """
    The state of every edge on the fixed sides of ``boundary``.

    :raises InconsistentCardinality: when the diagrams do not share one box
        of size ``domain.n``
    """
    boundary.context(domain.n)
    states: Dict[EdgeKey, EdgeState] = {}
    for side, spec in boundary.sides.items():
        edges = _oriented(domain.side_edges(side), spec.reverse)
        if spec.diagram is None:
            continue
        frame = set(spec.diagram.frame)
        for pos, edge in enumerate(edges, start=1):
            states[edge] = (
                RECORDED[side] if pos in frame else _other_state(side, edge[0])
            )
    return states


@dataclass(frozen=True)
class Puzzle:
    domain: PuzzleDomain
    context: BoxContext
    #: (cell, tile id) in scan order
    tiles: Tuple[Tuple[Cell, int], ...]

    @property
    def catalogue(self) -> TileCatalogue:
        return catalogue()

    def tile(self, cell: Cell) -> int:
        return dict(self.tiles)[cell]

    def edge_states(self) -> Dict[EdgeKey, EdgeState]:
        cat = self.catalogue
        states: Dict[EdgeKey, EdgeState] = {}
        for cell, tile_id in self.tiles:
            table = cat.up_tiles if cell.is_up else cat.down_tiles
            for key, state in zip(cell.edges(), table[tile_id]):
                states[key] = state
        return states

    def read_side(self, side: Side, reverse: bool = False) -> YoungDiagram:
        """
        The diagram on ``side``.

        :raises ValueError: when the side does not carry a k-subset
        """
        states = self.edge_states()
        edges = _oriented(self.domain.side_edges(side), reverse)
        frame = [
            pos
            for pos, edge in enumerate(edges, start=1)
            if states[edge] == RECORDED[side]
        ]
        return diagram_of_frame(frame, self.context)

    @property
    def k_tiles(self) -> int:
        k_tile = self.catalogue.k_tile
        return sum(1 for cell, t in self.tiles if cell.is_up and t == k_tile)

    def lozenges(self) -> Iterator[Tuple[int, int, Rhombus]]:
        """``(p, q, (up id, down id))`` for every complete lozenge."""
        by_cell = dict(self.tiles)
        for cell, tile_id in self.tiles:
            if not cell.is_up:
                continue
            below = down(cell.p, cell.q)
            if below in by_cell:
                yield cell.p, cell.q, (tile_id, by_cell[below])

    @property
    def equivariant_rhombi(self) -> Tuple[Tuple[int, int], ...]:
        eq = self.catalogue.equivariant_tile
        return tuple((p, q) for p, q, rh in self.lozenges() if rh == (eq, eq))

    def midline(self) -> str:
        """Edge states along the horizontal diagonal of a lozenge, left to right."""
        if self.domain.shape is not Shape.LOZENGE:
            raise ValueError(f"Invalid midline request on {self.domain}")
        states = self.edge_states()
        n = self.domain.n
        return "".join(
            states[up(u - 1, n - u).edges()[2]].short for u in range(1, n + 1)
        )

    def __str__(self) -> str:
        rows: Dict[int, List[str]] = {}
        for cell, tile_id in self.tiles:
            row, _ = self.domain.position(cell)
            rows.setdefault(row, []).append(("u" if cell.is_up else "d") + str(tile_id))
        return "\n".join(" ".join(rows[r]) for r in sorted(rows))


@lru_cache(maxsize=1)
def catalogue() -> TileCatalogue:
    return derive_tiles()


def _allowed_on_free_sides(
    domain: PuzzleDomain, boundary: BoundarySpec
) -> Dict[EdgeKey, FrozenSet[EdgeState]]:
    allowed = {}
    for side in domain.sides:
        if boundary.spec(side).diagram is not None:
            continue
        for edge in domain.side_edges(side):
            allowed[edge] = BOUNDARY_STATES[edge[0]]
    return allowed


def iter_puzzles(
    domain: PuzzleDomain,
    boundary: BoundarySpec,
    exclude: Iterable[int] = (),
    reverse_scan: bool = False,
) -> Iterator[Puzzle]:
    """
    Backtrack over the cells in scan order, placing every tile compatible
    with the edges already fixed.

    :param exclude: tile ids left out, for both orientations
    :param reverse_scan: visit the cells bottom-up instead
    """
    context = boundary.context(domain.n)
    cat = catalogue()
    banned = set(exclude)
    ups = [(t, e) for t, e in cat.up_tiles.items() if t not in banned]
    downs = [(t, e) for t, e in cat.down_tiles.items() if t not in banned]
    cells = list(domain.cells())
    if reverse_scan:
        cells.reverse()
    state = encode_boundary(domain, boundary)
    allowed = _allowed_on_free_sides(domain, boundary)
    placed: List[int] = []

    def fits(keys: Tuple[EdgeKey, ...], edges: Tuple[EdgeState, ...]) -> bool:
        for key, edge in zip(keys, edges):
            current = state.get(key)
            if current is not None:
                if current != edge:
                    return False
            elif key in allowed and edge not in allowed[key]:
                return False
        return True

    def place(idx: int) -> Iterator[Puzzle]:
        if idx == len(cells):
            order = sorted(zip(cells, placed), key=lambda pair: _scan_key(pair[0]))
            yield Puzzle(domain, context, tuple(order))
            return
        cell = cells[idx]
        keys = cell.edges()
        for tile_id, edges in ups if cell.is_up else downs:
            if not fits(keys, edges):
                continue
            fresh = [key for key in keys if key not in state]
            for key, edge in zip(keys, edges):
                if key in fresh:
                    state[key] = edge
            placed.append(tile_id)
            yield from place(idx + 1)
            placed.pop()
            for key in fresh:
                del state[key]

    for puzzle in place(0):
        try:
            for side in domain.sides:
                spec = boundary.spec(side)
                if spec.diagram is None:
                    puzzle.read_side(side, spec.reverse)
        except ValueError:
            log.debug("dropping a puzzle whose free side is not a k-subset")
            continue
        yield puzzle


def enumerate_puzzles(
    domain: PuzzleDomain,
    boundary: BoundarySpec,
    exclude: Iterable[int] = (),
    reverse_scan: bool = False,
) -> List[Puzzle]:
    """Every puzzle of ``domain`` with the given boundary, in discovery order."""
    found = list(iter_puzzles(domain, boundary, exclude, reverse_scan))
    log.debug("%s: %d puzzles", domain, len(found))
    return found


# weights


class Table(Enum):
    #: weights read off the matrix gluing along horizontal edges
    STANDARD = "standard"
    #: same rhombi, weights of the matrix gluing along 120-degree edges
    MODIFIED = "modified"


class CoordinateMap(Enum):
    #: ``i = n - q``
    OPPOSITE = "opposite"
    #: ``i = q + 1``
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class WeightScheme:
    table: Table = Table.STANDARD
    coordinates: CoordinateMap = CoordinateMap.OPPOSITE

    def indices(self, p: int, q: int, n: int) -> Tuple[int, int]:
        """``(i, j)`` of the lozenge at ``(p, q)``."""
        i = n - q if self.coordinates is CoordinateMap.OPPOSITE else q + 1
        return i, p + 1


STANDARD = WeightScheme()
MODIFIED = WeightScheme(Table.MODIFIED)
MODIFIED_DIAGONAL = WeightScheme(Table.MODIFIED, CoordinateMap.DIAGONAL)


@lru_cache(maxsize=None)
def weight_table(table: Table) -> Dict[Rhombus, Tuple[int, int]]:
    """``rhombus -> (a, b)`` for the weight ``a + b*w``."""
    rows = catalogue().rows
    a_row = rows[Orientation.A_ROW]
    if table is Table.STANDARD:
        return a_row.linear_forms()
    c_forms = rows[Orientation.C_ROW].linear_forms()
    c_rhombi = rows[Orientation.C_ROW].rhombi()
    return {
        rhombus: c_forms[c_rhombus]
        for rhombus, c_rhombus in zip(a_row.rhombi(), c_rhombi)
    }


def weight(
    puzzle: Puzzle,
    scheme: WeightScheme,
    numerator: Alphabet,
    denominator: Alphabet,
) -> RationalFunction:
    """
    Product over the complete lozenges at ``(p, q)`` of ``a + b*w`` with
    ``w = numerator_i / denominator_j``; unpaired triangles weigh 1.
    """
    n = puzzle.domain.n
    if len(numerator) != n or len(denominator) != n:
        raise ValueError(f"Invalid alphabets for {puzzle.domain}")
    forms = weight_table(scheme.table)
    res = as_rational(1)
    for p, q, rhombus in puzzle.lozenges():
        a, b = forms[rhombus]
        if b == 0:
            if a != 1:
                res = res * a
            continue
        i, j = scheme.indices(p, q, n)
        w = numerator[i - 1] / denominator[j - 1]
        res = res * (w * b + a)
    return res


# halves of a lozenge


def half_lozenge_top(
    upper_left: YoungDiagram, upper_right: YoungDiagram
) -> List[Tuple[Puzzle, YoungDiagram]]:
    """
    Upper halves of a lozenge with the given upper sides, each with the
    diagram read on its base.
    """
    domain = PuzzleDomain.tri_up(upper_left.context.n)
    boundary = BoundarySpec(
        {
            Side.LEFT: SideSpec(upper_left),
            Side.RIGHT: SideSpec(upper_right),
        }
    )
    return [(p, p.read_side(Side.BASE)) for p in enumerate_puzzles(domain, boundary)]


def half_lozenge_bottom(
    sigma: YoungDiagram,
    nu: Optional[YoungDiagram] = None,
    rho: Optional[YoungDiagram] = None,
) -> List[Tuple[Puzzle, YoungDiagram, YoungDiagram]]:
    """
    Lower halves below the mid-line diagram ``sigma``, with ``nu`` read from
    the right corner to the bottom and ``rho`` from the bottom to the left
    corner. Each result carries the ``(nu, rho)`` actually found.
    """
    domain = PuzzleDomain.tri_down(sigma.context.n)
    boundary = BoundarySpec(
        {
            Side.TOP: SideSpec(sigma),
            Side.LOWER_RIGHT: SideSpec(nu, reverse=True),
            Side.LOWER_LEFT: SideSpec(rho, reverse=True),
        }
    )
    return [
        (
            p,
            p.read_side(Side.LOWER_RIGHT, reverse=True),
            p.read_side(Side.LOWER_LEFT, reverse=True),
        )
        for p in enumerate_puzzles(domain, boundary)
    ]

