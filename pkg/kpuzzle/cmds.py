"""Implementations of the ``kpuzzle`` subcommands."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from kpuzzle.algebra import (
    Alphabet,
    Family,
    RationalFunction,
    ones,
    parse_rational,
    reversed_alphabet,
)
from kpuzzle.base_types import NonzeroResidual, SingularSystem
from kpuzzle.coeffs import CoeffQuery, Rule, collect, expand, puzzles
from kpuzzle.config import Settings
from kpuzzle.grothendieck import (
    GrothQuery,
    dual_groth,
    dual_groth_lattice,
    groth_det,
    groth_inductive,
    groth_lattice,
)
from kpuzzle.oracle import oracle_coefficients
from kpuzzle.puzzle import Puzzle
from kpuzzle.render import write_svgs
from kpuzzle.serialize import (
    coefficient_to_dict,
    dumps,
    dumps_puzzles,
    expansion_to_dict,
    polynomial_to_dict,
)
from kpuzzle.vertexmodel import ybe_components_rank1, ybe_components_rank2
from kpuzzle.young import BoxContext, YoungDiagram, all_diagrams, parse_partition

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _context(args: argparse.Namespace) -> BoxContext:
    return BoxContext(args.k, args.n)


def parse_alphabet(text: str, n: int) -> Alphabet:
    """``sym``, ``rev``, ``ones`` or a comma separated list of ``n`` values."""
    if text == "sym":
        return ()
    if text == "rev":
        return reversed_alphabet(Family.Y, n)
    if text == "ones":
        return ones(n)
    values = tuple(parse_rational(part) for part in text.split(","))
    if len(values) != n:
        raise ValueError(f"Invalid alphabet {text!r}, expected {n} values")
    return values


def cmd_groth(args: argparse.Namespace, settings: Settings) -> int:
    ctx = _context(args)
    query = GrothQuery(parse_partition(args.shape, ctx), parse_alphabet(args.y, ctx.n))
    max_sites = settings.lattice.max_sites
    result: RationalFunction
    if args.dual:
        if args.method == "lattice":
            result = dual_groth_lattice(query, max_sites)
        else:
            method = "definition" if args.method == "inductive" else "determinant"
            result = dual_groth(query, method)
    elif args.method == "lattice":
        result = groth_lattice(query, max_sites)
    elif args.method == "inductive":
        result = groth_inductive(query)
    else:
        result = groth_det(query)
    if args.format != "text":
        document = polynomial_to_dict(query.diagram, args.dual, args.method, result)
        print(dumps(document, args.format))
    else:
        print(result)
    return EXIT_OK


def _diagrams(args: argparse.Namespace) -> Tuple[YoungDiagram, YoungDiagram]:
    ctx = _context(args)
    return parse_partition(args.lam, ctx), parse_partition(args.mu, ctx)


def _svg_stem(
    rule: Rule, lam: YoungDiagram, mu: YoungDiagram, nu: YoungDiagram
) -> str:
    return f"{rule}_{lam.slug()}_{mu.slug()}_{nu.slug()}"


def _render(
    rule: Rule,
    lam: YoungDiagram,
    mu: YoungDiagram,
    found: List[Tuple[Puzzle, YoungDiagram]],
    directory: str,
    settings: Settings,
) -> None:
    by_nu: Dict[YoungDiagram, List[Puzzle]] = {}
    for puzzle, nu in found:
        by_nu.setdefault(nu, []).append(puzzle)
    for nu, group in by_nu.items():
        stem = _svg_stem(rule, lam, mu, nu)
        write_svgs(group, Path(directory), stem, settings.render)


def cmd_expand(args: argparse.Namespace, settings: Settings) -> int:
    rule = Rule.parse(args.rule)
    lam, mu = _diagrams(args)
    query = CoeffQuery(rule, lam, mu)
    found = puzzles(query)
    coefficients = collect(query, found)
    if args.format != "text":
        print(dumps(expansion_to_dict(str(rule), lam, mu, coefficients), args.format))
    else:
        for nu, value in coefficients.items():
            print(f"{nu}: {value}")
    if args.render_svg:
        with_nu = [(p, query.read_nu(p)) for p, _ in found]
        _render(rule, lam, mu, with_nu, args.render_svg, settings)
    return EXIT_OK


def cmd_coeff(args: argparse.Namespace, settings: Settings) -> int:
    rule = Rule.parse(args.rule)
    lam, mu = _diagrams(args)
    nu = parse_partition(args.nu, lam.context)
    found = puzzles(CoeffQuery(rule, lam, mu, nu))
    total = RationalFunction(0)
    for _, value in found:
        total = total + value
    if args.format != "text":
        print(dumps(coefficient_to_dict(str(rule), lam, mu, nu, total), args.format))
    else:
        print(total)
    if args.render_svg:
        _render(rule, lam, mu, [(p, nu) for p, _ in found], args.render_svg, settings)
    return EXIT_OK


def cmd_puzzles(args: argparse.Namespace, settings: Settings) -> int:
    rule = Rule.parse(args.rule)
    lam, mu = _diagrams(args)
    nu = parse_partition(args.nu, lam.context)
    found = puzzles(CoeffQuery(rule, lam, mu, nu))
    if args.format != "text":
        print(dumps_puzzles(found, args.format))
    else:
        for index, (puzzle, value) in enumerate(found, start=1):
            print(f"# puzzle {index}, {puzzle.k_tiles} K-tiles, weight {value}")
            print(puzzle)
    if args.render_svg:
        _render(rule, lam, mu, [(p, nu) for p, _ in found], args.render_svg, settings)
    return EXIT_OK


def cmd_verify_ybe(args: argparse.Namespace, settings: Settings) -> int:
    ok = True
    for rank, (total, agreeing) in (
        (1, ybe_components_rank1()),
        (2, ybe_components_rank2()),
    ):
        print(f"rank {rank}: {agreeing}/{total} components agree")
        ok = ok and agreeing == total
    return EXIT_OK if ok else EXIT_FAILED


def _parse_box(text: str) -> Tuple[int, int]:
    try:
        rows, cols = (int(part) for part in text.lower().split("x"))
    except ValueError as err:
        raise ValueError(f"Invalid box {text!r}, expected AxB") from err
    return rows, cols


def cross_check(
    rule: Rule,
    lam: YoungDiagram,
    mu: YoungDiagram,
    settings: Settings,
) -> Optional[bool]:
    """Puzzles against the oracle, ``None`` when the oracle has no answer."""
    try:
        expected = oracle_coefficients(rule, lam, mu, settings.oracle)
    except (NonzeroResidual, SingularSystem) as err:
        log.warning("no oracle answer for %s %s %s: %s", rule, lam, mu, err)
        return None
    found = expand(rule, lam, mu)
    return set(found) == set(expected) and all(
        found[nu] == expected[nu] for nu in found
    )


def cmd_verify_cross(args: argparse.Namespace, settings: Settings) -> int:
    rule = Rule.parse(args.rule)
    rows, cols = _parse_box(args.maxbox)
    if rows > args.k:
        raise ValueError(f"Invalid box {args.maxbox} for k={args.k}")
    ctx = BoxContext(args.k, args.n if args.n is not None else args.k + cols)
    diagrams = [
        d for d in all_diagrams(ctx) if d.height <= rows and d.width <= cols
    ]
    print(f"{rule} in {ctx}")
    print("\t".join(["lam\\mu"] + [str(mu) for mu in diagrams]))
    failed = False
    for lam in diagrams:
        marks = []
        for mu in diagrams:
            verdict = cross_check(rule, lam, mu, settings)
            marks.append({True: "PASS", False: "FAIL", None: "n/a"}[verdict])
            failed = failed or verdict is False
        print("\t".join([str(lam)] + marks))
    return EXIT_FAILED if failed else EXIT_OK
