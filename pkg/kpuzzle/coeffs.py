"""
Littlewood-Richardson coefficients as sums over puzzles.

Each :class:`Rule` fixes a domain, which side carries which diagram and how
the puzzles are weighted. The non-equivariant rules count puzzles without the
equivariant rhombus and attach a sign; the others sum rhombus weights.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple, Union

from kpuzzle.algebra import (
    ONE,
    ZERO,
    Alphabet,
    Family,
    RationalFunction,
    alphabet,
    as_alphabet,
)
from kpuzzle.puzzle import (
    MODIFIED,
    MODIFIED_DIAGONAL,
    STANDARD,
    BoundarySpec,
    Puzzle,
    PuzzleDomain,
    Shape,
    Side,
    SideSpec,
    WeightScheme,
    catalogue,
    enumerate_puzzles,
    weight,
)
from kpuzzle.young import YoungDiagram, frame_of

log = logging.getLogger(__name__)


class Rule(Enum):
    T1 = "T1"
    T1D = "T1d"
    T2 = "T2"
    T2D = "T2d"
    T2DD = "T2dd"
    T3 = "T3"
    T3D = "T3d"
    T3DD = "T3dd"

    @classmethod
    def parse(cls, text: str) -> Rule:
        """Accept ``T2d`` as well as the primed spelling ``T2'``."""
        name = text.strip().replace("'", "d")
        for rule in cls:
            if rule.value.lower() == name.lower():
                return rule
        raise ValueError(f"Invalid rule {text!r}")

    def __str__(self) -> str:
        return self.value


#: a side and whether it is read against its canonical direction
Placement = Tuple[Side, bool]


@dataclass(frozen=True)
class RuleSpec:
    shape: Shape
    lam: Placement
    mu: Placement
    nu: Placement
    #: weights, ``None`` for the signed counting rules
    scheme: Optional[WeightScheme] = None
    #: side forced to the empty diagram
    empty_side: Optional[Side] = None
    #: ``w = y_i / z_j`` instead of ``y_i / y_j``
    two_alphabets: bool = False
    #: products of dual polynomials ``G_lam``
    lower: bool = False


_UP = dict(shape=Shape.TRI_UP, lam=(Side.LEFT, False), mu=(Side.RIGHT, False))
_DOWN = dict(
    shape=Shape.TRI_DOWN, lam=(Side.LOWER_LEFT, False), mu=(Side.LOWER_RIGHT, False)
)

RULES: Dict[Rule, RuleSpec] = {
    Rule.T1: RuleSpec(nu=(Side.BASE, False), **_UP),
    Rule.T1D: RuleSpec(nu=(Side.TOP, False), lower=True, **_DOWN),
    Rule.T2: RuleSpec(nu=(Side.BASE, False), scheme=STANDARD, **_UP),
    Rule.T2D: RuleSpec(nu=(Side.TOP, False), scheme=STANDARD, lower=True, **_DOWN),
    Rule.T2DD: RuleSpec(
        Shape.LOZENGE,
        lam=(Side.LOWER_LEFT, False),
        mu=(Side.LOWER_RIGHT, False),
        nu=(Side.UPPER_LEFT, False),
        scheme=STANDARD,
        empty_side=Side.UPPER_RIGHT,
        two_alphabets=True,
        lower=True,
    ),
    Rule.T3: RuleSpec(
        Shape.TRI_UP,
        lam=(Side.RIGHT, False),
        mu=(Side.BASE, True),
        nu=(Side.LEFT, True),
        scheme=MODIFIED,
    ),
    Rule.T3D: RuleSpec(
        Shape.TRI_DOWN,
        lam=(Side.LOWER_LEFT, False),
        mu=(Side.TOP, True),
        nu=(Side.LOWER_RIGHT, True),
        scheme=MODIFIED,
        lower=True,
    ),
    Rule.T3DD: RuleSpec(
        Shape.LOZENGE,
        lam=(Side.LOWER_LEFT, False),
        mu=(Side.UPPER_LEFT, True),
        nu=(Side.LOWER_RIGHT, True),
        scheme=MODIFIED_DIAGONAL,
        empty_side=Side.UPPER_RIGHT,
        two_alphabets=True,
        lower=True,
    ),
}


@dataclass(frozen=True, eq=False)
class CoeffQuery:
    """
    :param nu: the output diagram, ``None`` to leave its side free
    :param y: equivariant parameters, symbolic ``y1..yn`` by default
    :param z: second alphabet of the lozenge rules, symbolic ``z1..zn``
    """

    rule: Rule
    lam: YoungDiagram
    mu: YoungDiagram
    nu: Optional[YoungDiagram] = None
    y: Alphabet = field(default=())
    z: Alphabet = field(default=())

    def __post_init__(self) -> None:
        n = self.lam.context.n
        y = as_alphabet(self.y) or alphabet(Family.Y, n)
        z = as_alphabet(self.z) or alphabet(Family.Z, n)
        for name, alpha in (("y", y), ("z", z)):
            if len(alpha) != n:
                raise ValueError(f"Invalid {name} alphabet of length {len(alpha)}")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def spec(self) -> RuleSpec:
        return RULES[self.rule]

    def domain(self) -> PuzzleDomain:
        return PuzzleDomain(self.spec.shape, self.lam.context.n)

    def boundary(self) -> BoundarySpec:
        spec = self.spec
        sides = {
            spec.lam[0]: SideSpec(self.lam, spec.lam[1]),
            spec.mu[0]: SideSpec(self.mu, spec.mu[1]),
            spec.nu[0]: SideSpec(self.nu, spec.nu[1]),
        }
        if spec.empty_side is not None:
            sides[spec.empty_side] = SideSpec(YoungDiagram.empty(self.lam.context))
        return BoundarySpec(sides)

    def read_nu(self, puzzle: Puzzle) -> YoungDiagram:
        side, reverse = self.spec.nu
        return puzzle.read_side(side, reverse)

    def weigh(self, puzzle: Puzzle, nu: YoungDiagram) -> RationalFunction:
        spec = self.spec
        if spec.scheme is None:
            ctx = self.lam.context
            if spec.lower:
                exponent = self.lam.size + self.mu.size - nu.size - ctx.area
            else:
                exponent = nu.size - self.lam.size - self.mu.size
            return -ONE if exponent % 2 else ONE
        denominator = self.z if spec.two_alphabets else self.y
        return weight(puzzle, spec.scheme, self.y, denominator)


def _exclusions(rule: Rule) -> Tuple[int, ...]:
    if RULES[rule].scheme is None:
        return (catalogue().equivariant_tile,)
    return ()


def puzzles(query: CoeffQuery) -> List[Tuple[Puzzle, RationalFunction]]:
    """The puzzles of ``query`` with their (signed) weights."""
    found = enumerate_puzzles(
        query.domain(), query.boundary(), exclude=_exclusions(query.rule)
    )
    result = []
    for puzzle in found:
        nu = query.nu if query.nu is not None else query.read_nu(puzzle)
        result.append((puzzle, query.weigh(puzzle, nu)))
    log.debug(
        "%s lam=%s mu=%s nu=%s: %d puzzles",
        query.rule,
        query.lam,
        query.mu,
        query.nu,
        len(result),
    )
    return result


def coefficient(query: CoeffQuery) -> RationalFunction:
    if query.nu is None:
        raise ValueError("Invalid coefficient query without nu")
    total = ZERO
    for _, value in puzzles(query):
        total = total + value
    return total


def collect(
    query: CoeffQuery, found: Iterable[Tuple[Puzzle, RationalFunction]]
) -> Dict[YoungDiagram, RationalFunction]:
    """Sum weighted puzzles by ``nu``, dropping zeros, ordered by frame."""
    sums: Dict[YoungDiagram, RationalFunction] = {}
    for puzzle, value in found:
        nu = query.read_nu(puzzle)
        sums[nu] = sums.get(nu, ZERO) + value
    return {
        nu: sums[nu] for nu in sorted(sums, key=frame_of) if not sums[nu].is_zero()
    }


def expand(
    rule: Rule,
    lam: YoungDiagram,
    mu: YoungDiagram,
    y: Alphabet = (),
    z: Alphabet = (),
) -> Dict[YoungDiagram, RationalFunction]:
    """Nonzero coefficients for every ``nu``, ordered by frame."""
    query = CoeffQuery(rule, lam, mu, None, y, z)
    return collect(query, puzzles(query))


def stability_bound(
    lam: YoungDiagram,
    mu: YoungDiagram,
    k: int,
    lam_tilde: Optional[YoungDiagram] = None,
) -> int:
    """``2 (k + w(mu) + w(lam) + h(lam_tilde))``, ``lam_tilde`` is ``lam`` if unset."""
    tilde = lam if lam_tilde is None else lam_tilde
    return 2 * (k + mu.width + lam.width + tilde.height)


# composition trees


@dataclass(frozen=True)
class Leaf:
    diagram: YoungDiagram
    #: the leaf is ``G_lam`` rather than ``G^lam``
    dual: bool = False


@dataclass(frozen=True)
class Vertex:
    rule: Rule
    left: Tree
    right: Tree


@dataclass(frozen=True)
class Pairing:
    """``<upper lower>`` through ``<G^lam G_mu> = delta``."""

    upper: Tree
    lower: Tree


Tree = Union[Leaf, Vertex, Pairing]
Expansion = Dict[YoungDiagram, RationalFunction]

#: rules whose inputs and output share one basis and one alphabet
TREE_RULES = (Rule.T1, Rule.T1D, Rule.T2, Rule.T2D)


class _Evaluator:
    def __init__(self, y: Alphabet) -> None:
        self.y = y
        self.cache: Dict[Tuple[Rule, YoungDiagram, YoungDiagram], Expansion] = {}

    def product(self, rule: Rule, lam: YoungDiagram, mu: YoungDiagram) -> Expansion:
        key = (rule, lam, mu)
        if key not in self.cache:
            self.cache[key] = expand(rule, lam, mu, self.y)
        return self.cache[key]

    def evaluate(self, tree: Tree) -> Tuple[Expansion, bool]:
        """The expansion of ``tree`` and whether it is in the lower basis."""
        if isinstance(tree, Leaf):
            return {tree.diagram: ONE}, tree.dual
        if isinstance(tree, Pairing):
            raise ValueError("Invalid tree with a pairing below the root")
        if tree.rule not in TREE_RULES:
            raise ValueError(f"Invalid tree rule {tree.rule}")
        lower = RULES[tree.rule].lower
        left, left_lower = self.evaluate(tree.left)
        right, right_lower = self.evaluate(tree.right)
        if left_lower != lower or right_lower != lower:
            raise ValueError(f"Invalid tree, {tree.rule} fed with the wrong basis")
        result: Expansion = {}
        for lam, a in left.items():
            for mu, b in right.items():
                for nu, c in self.product(tree.rule, lam, mu).items():
                    result[nu] = result.get(nu, ZERO) + a * b * c
        return {nu: c for nu, c in result.items() if not c.is_zero()}, lower


def tree_expectation(tree: Tree, y: Alphabet = ()) -> RationalFunction:
    """
    ``<tree>``: internal edges sum over every diagram of the box. A pairing
    at the root contracts an upper expansion with a lower one; otherwise
    ``<G^nu> = 1`` and ``<G_nu> = delta_{nu, empty}``.
    """
    evaluator = _Evaluator(as_alphabet(y))
    if isinstance(tree, Pairing):
        upper, upper_lower = evaluator.evaluate(tree.upper)
        lower, lower_lower = evaluator.evaluate(tree.lower)
        if upper_lower or not lower_lower:
            raise ValueError("Invalid pairing, expected an upper and a lower tree")
        total = ZERO
        for nu, a in upper.items():
            if nu in lower:
                total = total + a * lower[nu]
        return total
    values, lower = evaluator.evaluate(tree)
    if lower:
        return next((c for nu, c in values.items() if nu.size == 0), ZERO)
    total = ZERO
    for c in values.values():
        total = total + c
    return total
