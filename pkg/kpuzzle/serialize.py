"""JSON and YAML documents for puzzles and expansions."""

from __future__ import annotations

import json
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

import yaml

from kpuzzle.algebra import RationalFunction, parse_rational
from kpuzzle.base_types import SCHEMA_VERSION
from kpuzzle.puzzle import Orient, Puzzle, PuzzleDomain, Shape
from kpuzzle.young import BoxContext, YoungDiagram, parse_partition


def _check_schema(document: Mapping[str, Any]) -> None:
    schema = document.get("schema")
    if schema != SCHEMA_VERSION:
        raise ValueError(f"Invalid schema version {schema!r}")


def puzzle_to_dict(
    puzzle: Puzzle, weight: Optional[RationalFunction] = None
) -> Dict[str, Any]:
    cells = []
    for cell, tile_id in puzzle.tiles:
        row, col = puzzle.domain.position(cell)
        cells.append(
            {"row": row, "col": col, "orient": cell.orient.value, "tile": tile_id}
        )
    return {
        "schema": SCHEMA_VERSION,
        "domain": puzzle.domain.shape.value,
        "n": puzzle.domain.n,
        "k": puzzle.context.k,
        "cells": cells,
        "k_tiles": puzzle.k_tiles,
        "weight": None if weight is None else str(weight),
    }


def puzzle_from_dict(
    document: Mapping[str, Any]
) -> Tuple[Puzzle, Optional[RationalFunction]]:
    """The puzzle of a document and its weight, when one was recorded."""
    _check_schema(document)
    try:
        domain = PuzzleDomain(Shape(document["domain"]), int(document["n"]))
        context = BoxContext(int(document["k"]), domain.n)
        placed = {
            domain.cell_at(c["row"], c["col"], Orient(c["orient"])): int(c["tile"])
            for c in document["cells"]
        }
    except KeyError as err:
        raise ValueError(f"Invalid puzzle document, missing {err}") from err
    if set(placed) != set(domain.cells()):
        raise ValueError(f"Invalid puzzle document, cells do not cover {domain}")
    tiles = tuple((cell, placed[cell]) for cell in domain.cells())
    weight = document.get("weight")
    return (
        Puzzle(domain, context, tiles),
        None if weight is None else parse_rational(weight),
    )


def expansion_to_dict(
    rule: str,
    lam: YoungDiagram,
    mu: YoungDiagram,
    coefficients: Mapping[YoungDiagram, RationalFunction],
) -> Dict[str, Any]:
    ctx = lam.context
    return {
        "schema": SCHEMA_VERSION,
        "rule": rule,
        "k": ctx.k,
        "n": ctx.n,
        "lambda": str(lam),
        "mu": str(mu),
        "coefficients": {str(nu): str(c) for nu, c in coefficients.items()},
    }


def coefficient_to_dict(
    rule: str,
    lam: YoungDiagram,
    mu: YoungDiagram,
    nu: YoungDiagram,
    value: RationalFunction,
) -> Dict[str, Any]:
    ctx = lam.context
    return {
        "schema": SCHEMA_VERSION,
        "rule": rule,
        "k": ctx.k,
        "n": ctx.n,
        "lambda": str(lam),
        "mu": str(mu),
        "nu": str(nu),
        "coefficient": str(value),
    }


def polynomial_to_dict(
    lam: YoungDiagram, dual_basis: bool, method: str, value: RationalFunction
) -> Dict[str, Any]:
    ctx = lam.context
    return {
        "schema": SCHEMA_VERSION,
        "k": ctx.k,
        "n": ctx.n,
        "shape": str(lam),
        "dual": dual_basis,
        "method": method,
        "polynomial": str(value),
    }


def expansion_from_dict(
    document: Mapping[str, Any]
) -> Dict[YoungDiagram, RationalFunction]:
    _check_schema(document)
    ctx = BoxContext(int(document["k"]), int(document["n"]))
    return {
        parse_partition(nu, ctx): parse_rational(text)
        for nu, text in document["coefficients"].items()
    }


def dumps(document: Any, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(document, indent=2, ensure_ascii=False)
    if fmt == "yaml":
        return yaml.safe_dump(document, sort_keys=False, allow_unicode=True)
    raise ValueError(f"Invalid output format {fmt}")


def dumps_puzzles(
    pairs: Iterable[Tuple[Puzzle, Optional[RationalFunction]]], fmt: str = "json"
) -> str:
    return dumps([puzzle_to_dict(p, w) for p, w in pairs], fmt)
