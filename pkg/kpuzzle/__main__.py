import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from kpuzzle import cmds
from kpuzzle.base_types import KPuzzleError
from kpuzzle.config import Settings, load_settings

LOG_LEVEL_DICT: Dict[str, int] = {
    "critical": logging.CRITICAL,
    "fatal": logging.FATAL,
    "error": logging.ERROR,
    "warning": logging.WARNING,
    "warn": logging.WARN,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

RULE_HELP = "T1, T1d, T2, T2d, T2dd, T3, T3d or T3dd (primes allowed: T2')"


def loglevel_from_str(level: str) -> int:
    if level.lower() not in LOG_LEVEL_DICT:
        return logging.DEBUG
    return LOG_LEVEL_DICT[level.lower()]


def _add_box(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True, help="rows of the box")
    parser.add_argument("--n", type=int, required=True, help="k plus columns")


def _add_triple(parser: argparse.ArgumentParser, with_nu: bool) -> None:
    parser.add_argument("--rule", required=True, help=RULE_HELP)
    _add_box(parser)
    parser.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1")
    parser.add_argument("--mu", required=True)
    if with_nu:
        parser.add_argument("--nu", required=True)
    parser.add_argument(
        "--render-svg", metavar="DIR", help="write one SVG file per puzzle into DIR"
    )


def _add_format(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--json", dest="format", action="store_const", const="json", default="text"
    )
    group.add_argument("--yaml", dest="format", action="store_const", const="yaml")


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.description = "equivariant K-theoretic puzzles of Grassmannians"

    parser.add_argument(
        "--log-level",
        choices=list(LOG_LEVEL_DICT.keys())
        + list(map(lambda level: level.upper(), LOG_LEVEL_DICT.keys())),
        default=["warning"],
        nargs=1,
        help="Logging verbosity",
    )
    parser.add_argument("--log-file", help="log to this file instead of stderr")
    parser.add_argument("--config", help="YAML settings file")

    sub = parser.add_subparsers(dest="command", required=True)

    groth = sub.add_parser("groth", help="print a double Grothendieck polynomial")
    _add_box(groth)
    groth.add_argument("--shape", required=True, help="partition, e.g. 2,1")
    groth.add_argument("--dual", action="store_true", help="the dual polynomial")
    groth.add_argument(
        "--method", choices=("det", "inductive", "lattice"), default="det"
    )
    groth.add_argument(
        "--y", default="sym", help="sym, rev, ones or n comma separated values"
    )
    _add_format(groth)
    groth.set_defaults(handler=cmds.cmd_groth)

    expand = sub.add_parser("expand", help="all coefficients of a product")
    _add_triple(expand, with_nu=False)
    _add_format(expand)
    expand.set_defaults(handler=cmds.cmd_expand)

    coeff = sub.add_parser("coeff", help="a single coefficient")
    _add_triple(coeff, with_nu=True)
    _add_format(coeff)
    coeff.set_defaults(handler=cmds.cmd_coeff)

    puzzles = sub.add_parser("puzzles", help="list the puzzles of a coefficient")
    _add_triple(puzzles, with_nu=True)
    _add_format(puzzles)
    puzzles.set_defaults(handler=cmds.cmd_puzzles)

    verify = sub.add_parser("verify", help="self checks")
    checks = verify.add_subparsers(dest="check", required=True)
    ybe = checks.add_parser("ybe", help="Yang-Baxter equations of the R-matrices")
    ybe.set_defaults(handler=cmds.cmd_verify_ybe)
    cross = checks.add_parser("cross", help="puzzles against polynomial expansion")
    cross.add_argument("--rule", required=True, help=RULE_HELP)
    cross.add_argument("--k", type=int, required=True)
    cross.add_argument("--maxbox", required=True, help="AxB, diagrams fitting it")
    cross.add_argument("--n", type=int, help="defaults to k + B")
    cross.set_defaults(handler=cmds.cmd_verify_cross)


def cli_dispatch(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="kpuzzle")
    add_arguments(parser)
    args = parser.parse_args(argv)

    logging.basicConfig(
        filename=args.log_file,
        level=loglevel_from_str(args.log_level[0]),
        format="%(levelname)s %(name)s: %(message)s",
    )

    handler: Callable[[argparse.Namespace, Settings], int] = args.handler
    try:
        settings = load_settings(args.config) if args.config else Settings()
        return handler(args, settings)
    except (ValueError, KPuzzleError) as err:
        print(f"kpuzzle: error: {err}", file=sys.stderr)
        return cmds.EXIT_USAGE


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
