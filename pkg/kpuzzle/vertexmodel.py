"""
R-matrices of the two vertex models behind the puzzles.

The rank-one matrix drives the lattice construction of Grothendieck
polynomials. The three rank-two matrices satisfy a joint Yang-Baxter
equation; cutting each of their nonzero entries into two triangles through the
edge dictionary below yields the puzzle tiles and the rhombus weights.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from kpuzzle.algebra import (
    Coercible,
    Family,
    Monomial,
    Polynomial,
    Variable,
    as_rational,
    substitute,
)
from kpuzzle.base_types import EdgeState, InconsistentCatalogue

log = logging.getLogger(__name__)

#: the spectral variable every R-matrix entry is written in
SPECTRAL = Variable(Family.GENERIC, 1)

E, R, G, RG = EdgeState.EMPTY, EdgeState.RED, EdgeState.GREEN, EdgeState.BOTH

Entries = Tuple[Tuple[Polynomial, ...], ...]
Sparse = Dict[Tuple[int, int], Polynomial]


def _spectral_poly(constant: int, slope: int) -> Polynomial:
    return Polynomial.constant(constant) + Polynomial.variable(SPECTRAL).scale(slope)


def _dense(size: int, entries: Mapping[Tuple[int, int], Tuple[int, int]]) -> Entries:
    """Build a matrix from 1-based ``(row, col) -> (a, b)`` meaning ``a + b*z``."""
    rows = []
    for r in range(1, size + 1):
        rows.append(
            tuple(
                _spectral_poly(*entries[(r, c)]) if (r, c) in entries else Polynomial()
                for c in range(1, size + 1)
            )
        )
    return tuple(rows)


def _count(entries: Entries) -> int:
    return sum(1 for row in entries for e in row if not e.is_zero())


def _specialize(entries: Entries, value: Coercible) -> List[List[Polynomial]]:
    bind = {SPECTRAL: as_rational(value)}
    return [
        [substitute(e, bind).as_polynomial() if e else Polynomial() for e in row]
        for row in entries
    ]


@dataclass(frozen=True, eq=False)
class RMatrixRank1:
    """
    The five-vertex R-matrix on column vectors indexed by ``2a + j``.

    ``a`` is the occupation of the auxiliary line, ``j`` that of the site.
    """

    entries: Entries = field(
        default_factory=lambda: _dense(
            4,
            {
                (1, 1): (1, 0),
                (2, 3): (0, 1),
                (3, 2): (1, 0),
                (3, 3): (1, -1),
                (4, 4): (1, 0),
            },
        )
    )

    @property
    def nonzero_count(self) -> int:
        return _count(self.entries)

    def at(self, value: Coercible) -> List[List[Polynomial]]:
        return _specialize(self.entries, value)

    def transitions(
        self, value: Coercible
    ) -> Dict[Tuple[int, int], List[Tuple[int, int, Polynomial]]]:
        """``(a, j) -> [(a', j', amplitude)]`` for the spectral value given."""
        mat = self.at(value)
        res: Dict[Tuple[int, int], List[Tuple[int, int, Polynomial]]] = {}
        for col in range(4):
            res[divmod(col, 2)] = [
                (row // 2, row % 2, mat[row][col]) for row in range(4) if mat[row][col]
            ]
        return res


class Kind(Enum):
    A = "A"
    B = "B"
    C = "C"


# 1-based (row, col) -> (a, b) for a + b*z
_RANK2_ENTRIES: Dict[Kind, Dict[Tuple[int, int], Tuple[int, int]]] = {
    Kind.A: {
        (1, 5): (0, -1),
        (1, 9): (0, 1),
        (3, 3): (1, 0),
        (4, 4): (1, 0),
        (5, 9): (1, 0),
        (6, 6): (1, 0),
        (7, 7): (1, 0),
        (8, 8): (1, 0),
        (9, 1): (1, 0),
        (9, 5): (0, 1),
        (9, 9): (1, -1),
    },
    Kind.B: {
        (1, 1): (1, -1),
        (1, 5): (1, 0),
        (1, 9): (1, 0),
        (2, 2): (1, 0),
        (3, 3): (1, 0),
        (4, 4): (1, 0),
        (5, 1): (0, 1),
        (7, 7): (1, 0),
        (8, 8): (1, 0),
        (9, 1): (0, 1),
        (9, 5): (-1, 0),
    },
    Kind.C: {
        (2, 2): (1, 0),
        (2, 4): (1, 0),
        (3, 7): (-1, 0),
        (4, 2): (0, 1),
        (4, 4): (1, 0),
        (5, 5): (1, -1),
        (6, 6): (1, 0),
        (6, 8): (0, 1),
        (7, 7): (1, 0),
        (8, 6): (1, 0),
        (8, 8): (1, 0),
    },
}


@dataclass(frozen=True, eq=False)
class RMatrixRank2:
    """
    One of the three rank-two R-matrices.

    Entry ``(3(a-1)+b, 3(c-1)+d)`` is the amplitude from the incoming pair
    ``(a, b)`` to the outgoing pair ``(c, d)``, with ``a, b, c, d`` in 1..3.
    """

    kind: Kind
    entries: Entries

    @classmethod
    def of(cls, kind: Kind) -> RMatrixRank2:
        return cls(kind, _dense(9, _RANK2_ENTRIES[kind]))

    @property
    def nonzero_count(self) -> int:
        return _count(self.entries)

    def at(self, value: Coercible) -> List[List[Polynomial]]:
        return _specialize(self.entries, value)


def corrupted(
    matrix: Union[RMatrixRank1, RMatrixRank2],
    entry: Tuple[int, int],
    value: Coercible,
) -> Union[RMatrixRank1, RMatrixRank2]:
    """Copy of an R-matrix with the 1-based ``entry`` replaced by ``value``."""
    row, col = entry
    rows = [list(r) for r in matrix.entries]
    rows[row - 1][col - 1] = as_rational(value).as_polynomial()
    entries = tuple(tuple(r) for r in rows)
    if isinstance(matrix, RMatrixRank2):
        return RMatrixRank2(matrix.kind, entries)
    return RMatrixRank1(entries)


# Yang-Baxter equation


def _embed(
    mat: Sequence[Sequence[Polynomial]], dim: int, pair: Tuple[int, int]
) -> Sparse:
    """Act with a ``dim^2`` matrix on two of three tensor factors."""
    first, second = pair
    other = 3 - first - second
    res: Sparse = {}
    size = dim**2
    for r in range(size):
        for c in range(size):
            entry = mat[r][c]
            if not entry:
                continue
            for spectator in range(dim):
                row = [0, 0, 0]
                col = [0, 0, 0]
                row[first], row[second], row[other] = divmod(r, dim) + (spectator,)
                col[first], col[second], col[other] = divmod(c, dim) + (spectator,)
                res[(_flat(row, dim), _flat(col, dim))] = entry
    return res


def _flat(states: Sequence[int], dim: int) -> int:
    return (states[0] * dim + states[1]) * dim + states[2]


def _product(left: Sparse, right: Sparse) -> Sparse:
    by_row: Dict[int, List[Tuple[int, Polynomial]]] = {}
    for (r, c), v in right.items():
        by_row.setdefault(r, []).append((c, v))
    res: Sparse = {}
    for (r, mid), v in left.items():
        for c, w in by_row.get(mid, ()):
            res[(r, c)] = res.get((r, c), Polynomial()) + v * w
    return {key: val for key, val in res.items() if val}


def _compare(lhs: Sparse, rhs: Sparse, dim: int) -> Tuple[int, int]:
    total = dim**6
    wrong = sum(
        1
        for key in set(lhs) | set(rhs)
        if lhs.get(key, Polynomial()) != rhs.get(key, Polynomial())
    )
    return total, total - wrong


def _ratio(num: Coercible, den: Coercible):
    return as_rational(num) / as_rational(den)


def ybe_components_rank1(
    matrix: Optional[RMatrixRank1] = None,
    parameters: Optional[Sequence[Coercible]] = None,
) -> Tuple[int, int]:
    """
    Compare both sides of ``R_ab(za/zb) R_ac(za/zc) R_bc(zb/zc) =
    R_bc(zb/zc) R_ac(za/zc) R_ab(za/zb)``; returns (compared, agreeing).
    """
    mat = matrix or RMatrixRank1()
    za, zb, zc = parameters or [Variable(Family.Z, i) for i in (1, 2, 3)]
    r_ab = _embed(mat.at(_ratio(za, zb)), 2, (0, 1))
    r_ac = _embed(mat.at(_ratio(za, zc)), 2, (0, 2))
    r_bc = _embed(mat.at(_ratio(zb, zc)), 2, (1, 2))
    lhs = _product(_product(r_ab, r_ac), r_bc)
    rhs = _product(_product(r_bc, r_ac), r_ab)
    total, agreeing = _compare(lhs, rhs, 2)
    log.debug("rank one Yang-Baxter: %d of %d components agree", agreeing, total)
    return total, agreeing


def ybe_check_rank1(
    matrix: Optional[RMatrixRank1] = None,
    parameters: Optional[Sequence[Coercible]] = None,
) -> bool:
    total, agreeing = ybe_components_rank1(matrix, parameters)
    return total == agreeing


def ybe_components_rank2(
    matrices: Optional[Mapping[Kind, RMatrixRank2]] = None,
    parameters: Optional[Sequence[Coercible]] = None,
) -> Tuple[int, int]:
    """
    Compare both sides of ``A_ab(y/x) C_ac(x/z) B_bc(z/y) =
    B_bc(z/y) C_ac(x/z) A_ab(y/x)`` on all 3^6 components.
    """
    mats = {kind: RMatrixRank2.of(kind) for kind in Kind}
    mats.update(matrices or {})
    x, y, z = parameters or [Variable(f, 1) for f in (Family.X, Family.Y, Family.Z)]
    a_ab = _embed(mats[Kind.A].at(_ratio(y, x)), 3, (0, 1))
    c_ac = _embed(mats[Kind.C].at(_ratio(x, z)), 3, (0, 2))
    b_bc = _embed(mats[Kind.B].at(_ratio(z, y)), 3, (1, 2))
    lhs = _product(_product(a_ab, c_ac), b_bc)
    rhs = _product(_product(b_bc, c_ac), a_ab)
    total, agreeing = _compare(lhs, rhs, 3)
    log.debug("rank two Yang-Baxter: %d of %d components agree", agreeing, total)
    return total, agreeing


def ybe_check_rank2(
    matrices: Optional[Mapping[Kind, RMatrixRank2]] = None,
    parameters: Optional[Sequence[Coercible]] = None,
) -> bool:
    total, agreeing = ybe_components_rank2(matrices, parameters)
    return total == agreeing


# tiles

#: edge state of matrix index 1..3 on each edge direction
HORIZONTAL = {1: R, 2: G, 3: E}
DEG60 = {1: RG, 2: E, 3: G}
DEG120 = {1: E, 2: RG, 3: R}

#: up triangles as (left 60-degree, right 120-degree, base) edges
UP_TILES: Dict[int, Tuple[EdgeState, EdgeState, EdgeState]] = {
    0: (G, E, G),
    1: (E, R, R),
    2: (RG, R, G),
    3: (G, RG, R),
    4: (E, E, E),
    5: (E, G, G),
    6: (R, E, R),
    7: (G, R, RG),
    8: (RG, RG, E),
}

#: down triangles as (top, left 120-degree, right 60-degree) edges
DOWN_TILES: Dict[int, Tuple[EdgeState, EdgeState, EdgeState]] = {
    0: (G, E, G),
    1: (R, R, E),
    2: (G, R, RG),
    3: (R, RG, G),
    4: (E, E, E),
    5: (G, G, E),
    6: (R, E, R),
    7: (RG, R, G),
}

K_TILE = 8
EQUIVARIANT_TILE = 7


class Orientation(Enum):
    """Which pair of edges two triangles are glued along, one per matrix."""

    B_ROW = Kind.B
    A_ROW = Kind.A
    C_ROW = Kind.C


#: column order of the rhombus weight table, (up id, down id)
TABLE_LAYOUT: Dict[Orientation, Tuple[Tuple[int, int], ...]] = {
    Orientation.B_ROW: (
        (3, 3), (0, 3), (3, 0), (0, 0), (6, 6), (1, 1),
        (2, 2), (4, 1), (1, 4), (4, 4), (8, 2),
    ),
    Orientation.A_ROW: (
        (2, 2), (0, 2), (2, 0), (0, 0), (7, 7), (1, 1),
        (4, 4), (3, 1), (1, 3), (3, 3), (8, 4),
    ),
    Orientation.C_ROW: (
        (4, 4), (0, 4), (4, 0), (0, 0), (5, 5), (1, 1),
        (3, 3), (2, 1), (1, 2), (2, 2), (8, 3),
    ),
}  # fmt: skip

Rhombus = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class RhombusWeightRow:
    orientation: Orientation
    #: (rhombus, weight in SPECTRAL) in table order
    entries: Tuple[Tuple[Rhombus, Polynomial], ...]

    def weights(self) -> Tuple[Polynomial, ...]:
        return tuple(w for _, w in self.entries)

    def rhombi(self) -> Tuple[Rhombus, ...]:
        return tuple(r for r, _ in self.entries)

    def linear_forms(self) -> Dict[Rhombus, Tuple[int, int]]:
        """``rhombus -> (a, b)`` for weights ``a + b*w``."""
        forms = {}
        for rhombus, weight in self.entries:
            if weight.degree(SPECTRAL) > 1 or len(weight.variables()) > 1:
                raise InconsistentCatalogue(
                    f"weight {weight} of {rhombus} is not linear"
                )
            slope = weight.coefficient(Monomial.var(SPECTRAL))
            forms[rhombus] = (weight.constant_value(), slope)
        return forms


def _triangles(kind: Kind, row: int, col: int) -> Tuple[Tuple, Tuple]:
    """Cut a nonzero 1-based entry into (up edges, down edges)."""
    a, b = divmod(row - 1, 3)
    c, d = divmod(col - 1, 3)
    a, b, c, d = a + 1, b + 1, c + 1, d + 1
    if kind is Kind.A:
        up_l, down_l, down_r, up_r = DEG60[a], DEG120[b], DEG60[c], DEG120[d]
        up = (up_l, up_r, up_l ^ up_r)
        down = (down_l ^ down_r, down_l, down_r)
        shared = up[2] == down[0]
    elif kind is Kind.C:
        up_l, up_b, down_r, down_t = DEG60[a], HORIZONTAL[b], DEG60[c], HORIZONTAL[d]
        up = (up_l, up_l ^ up_b, up_b)
        down = (down_t, down_r ^ down_t, down_r)
        shared = up[1] == down[1]
    else:
        down_l, up_b, up_r, down_t = DEG120[a], HORIZONTAL[b], DEG120[c], HORIZONTAL[d]
        up = (up_r ^ up_b, up_r, up_b)
        down = (down_t, down_l, down_l ^ down_t)
        shared = up[0] == down[2]
    if not shared:
        raise InconsistentCatalogue(
            f"{kind.value}[{row},{col}] has a broken shared edge"
        )
    return up, down


def _tile_id(table: Mapping[int, Tuple], edges: Tuple, what: str) -> int:
    for tile_id, tile_edges in table.items():
        if tile_edges == edges:
            return tile_id
    shown = ",".join(EdgeState(e).short for e in edges)
    raise InconsistentCatalogue(f"unknown {what} triangle ({shown})")


@dataclass(frozen=True, eq=False)
class TileCatalogue:
    #: puzzle up triangles, id -> (left, right, base)
    up_tiles: Dict[int, Tuple[EdgeState, EdgeState, EdgeState]]
    #: puzzle down triangles, id -> (top, left, right)
    down_tiles: Dict[int, Tuple[EdgeState, EdgeState, EdgeState]]
    rows: Dict[Orientation, RhombusWeightRow]
    k_tile: int = K_TILE
    equivariant_tile: int = EQUIVARIANT_TILE

    def row(self, orientation: Orientation) -> RhombusWeightRow:
        return self.rows[orientation]


def derive_tiles(
    matrices: Optional[Mapping[Kind, RMatrixRank2]] = None
) -> TileCatalogue:
    """
    Split every nonzero rank-two entry into its two triangles.

    The puzzle tiles are the triangles met in the A matrix, whose entries
    glue an up and a down triangle along their horizontal edge.

    :raises InconsistentCatalogue: when a triangle is not a known tile, a
        shared edge disagrees, or a row assigns two weights to one rhombus
    """
    mats = {kind: RMatrixRank2.of(kind) for kind in Kind}
    mats.update(matrices or {})
    rows: Dict[Orientation, RhombusWeightRow] = {}
    ups: Dict[int, Tuple[EdgeState, EdgeState, EdgeState]] = {}
    downs: Dict[int, Tuple[EdgeState, EdgeState, EdgeState]] = {}
    for orientation in Orientation:
        kind = orientation.value
        found: Dict[Rhombus, Polynomial] = {}
        for r, row in enumerate(mats[kind].entries, start=1):
            for c, weight in enumerate(row, start=1):
                if not weight:
                    continue
                up, down = _triangles(kind, r, c)
                rhombus = (
                    _tile_id(UP_TILES, up, "up"),
                    _tile_id(DOWN_TILES, down, "down"),
                )
                if rhombus in found and found[rhombus] != weight:
                    raise InconsistentCatalogue(
                        f"rhombus {rhombus} has weights {found[rhombus]} and {weight}"
                    )
                found[rhombus] = weight
                if kind is Kind.A:
                    ups[rhombus[0]] = UP_TILES[rhombus[0]]
                    downs[rhombus[1]] = DOWN_TILES[rhombus[1]]
        layout = TABLE_LAYOUT[orientation]
        if set(found) != set(layout):
            raise InconsistentCatalogue(
                f"{kind.value} yields rhombi {sorted(found)}, expected {sorted(layout)}"
            )
        rows[orientation] = RhombusWeightRow(
            orientation, tuple((rh, found[rh]) for rh in layout)
        )
    log.debug("derived %d up and %d down tiles", len(ups), len(downs))
    return TileCatalogue(
        dict(sorted(ups.items())), dict(sorted(downs.items())), rows
    )
