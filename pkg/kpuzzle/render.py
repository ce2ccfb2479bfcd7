"""SVG drawings of puzzles."""

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from jinja2 import Environment, PackageLoader

from kpuzzle.base_types import EdgeState
from kpuzzle.config import RenderStyle
from kpuzzle.puzzle import Cell, Direction, EdgeKey, Puzzle

log = logging.getLogger(__name__)

_ENV = Environment(loader=PackageLoader("kpuzzle", "templates"), autoescape=True)

Point = Tuple[int, int]


def _plane(point: Point) -> Tuple[float, float]:
    p, q = point
    return (p - q) / 2, (p + q) * math.sqrt(3) / 2


def _vertices(cell: Cell) -> List[Point]:
    p, q = cell.p, cell.q
    if cell.is_up:
        return [(p, q), (p + 1, q), (p, q + 1)]
    return [(p + 1, q), (p + 1, q + 1), (p, q + 1)]


def _endpoints(edge: EdgeKey) -> Tuple[Point, Point]:
    direction, p, q = edge
    if direction is Direction.H:
        return (p + 1, q), (p, q + 1)
    if direction is Direction.DEG60:
        return (p, q), (p, q + 1)
    return (p, q), (p + 1, q)


def render_svg(puzzle: Puzzle, style: Optional[RenderStyle] = None) -> str:
    """
    One polygon per cell and one line per coloured half edge, running from the
    edge midpoint to the cell centre.
    """
    style = style or RenderStyle()
    cells = [cell for cell, _ in puzzle.tiles]
    corners = [_plane(v) for cell in cells for v in _vertices(cell)]
    margin = style.stroke_width
    x0 = min(x for x, _ in corners)
    y0 = min(y for _, y in corners)

    def scaled(x: float, y: float) -> Tuple[str, str]:
        return (
            f"{(x - x0) * style.scale + margin:.3f}",
            f"{(y - y0) * style.scale + margin:.3f}",
        )

    k_tile = puzzle.catalogue.k_tile
    equivariant = set(puzzle.equivariant_rhombi)
    states = puzzle.edge_states()
    polygons: List[Dict[str, str]] = []
    lines: List[Dict[str, object]] = []
    for cell, tile_id in puzzle.tiles:
        plane = [_plane(v) for v in _vertices(cell)]
        fill = "white"
        if cell.is_up and tile_id == k_tile:
            fill = style.k_tile_fill
        elif (cell.p, cell.q) in equivariant:
            fill = style.equivariant_fill
        polygons.append(
            {
                "points": " ".join(",".join(scaled(x, y)) for x, y in plane),
                "fill": fill,
                "label": f"{'up' if cell.is_up else 'down'} {tile_id}",
            }
        )
        cx = sum(x for x, _ in plane) / 3
        cy = sum(y for _, y in plane) / 3
        for edge in cell.edges():
            state = states[edge]
            (ax, ay), (bx, by) = (_plane(v) for v in _endpoints(edge))
            mx, my = (ax + bx) / 2, (ay + by) / 2
            colours = []
            if state & EdgeState.RED:
                colours.append(style.red)
            if state & EdgeState.GREEN:
                colours.append(style.green)
            for colour in colours:
                x1, y1 = scaled(mx, my)
                x2, y2 = scaled(cx, cy)
                lines.append(
                    {
                        "x1": x1,
                        "y1": y1,
                        "x2": x2,
                        "y2": y2,
                        "colour": colour,
                        "dashed": len(colours) == 2 and colour == style.green,
                    }
                )
    width = (max(x for x, _ in corners) - x0) * style.scale + 2 * margin
    height = (max(y for _, y in corners) - y0) * style.scale + 2 * margin
    return _ENV.get_template("puzzle.svg.j2").render(
        title=str(puzzle.domain),
        style=style,
        cells=polygons,
        lines=lines,
        width=f"{width:.3f}",
        height=f"{height:.3f}",
    )


def write_svgs(
    puzzles: Sequence[Puzzle],
    directory: Path,
    stem: str,
    style: Optional[RenderStyle] = None,
) -> List[Path]:
    """Write ``<stem>_<index>.svg`` for every puzzle, counting from 1."""
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for index, puzzle in enumerate(puzzles, start=1):
        path = directory / f"{stem}_{index}.svg"
        path.write_text(render_svg(puzzle, style), encoding="utf-8")
        written.append(path)
    log.debug("wrote %d drawings to %s", len(written), directory)
    return written
