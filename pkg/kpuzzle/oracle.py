"""
Coefficients by brute force: expand a product of Grothendieck polynomials in
a basis of Grothendieck polynomials by solving a linear system.

Products built for a rule are solved at the fixed points ``x = a_S`` (``S``
running over the k-subsets, ``a`` the basis alphabet). There the basis is
triangular, so the solution is the structure constants of the quotient ring at
the given ``n`` for every rule, two alphabets included. Problems without points
are solved at random rational points instead; that gives an exact polynomial
identity, which only exists when the product closes in the span of the basis,
and the identity is then checked symbolically.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from kpuzzle.algebra import (
    ONE,
    ZERO,
    Alphabet,
    Coercible,
    Family,
    RationalFunction,
    Variable,
    alphabet,
    alphabet_bindings,
    as_alphabet,
    as_rational,
    ones,
    solve,
    substitute,
)
from kpuzzle.base_types import (
    DenominatorVanishes,
    NonzeroResidual,
    SingularSystem,
)
from kpuzzle.coeffs import RULES, Rule
from kpuzzle.config import OracleSettings
from kpuzzle.grothendieck import grothendieck
from kpuzzle.young import BoxContext, YoungDiagram, all_diagrams, all_frames

log = logging.getLogger(__name__)

Point = Dict[Variable, RationalFunction]


@dataclass(frozen=True, eq=False)
class ExpansionProblem:
    """
    :param factors: the product to expand, as its factors
    :param basis: ``(diagram, polynomial)`` pairs, ordered by frame
    :param xs: the variables the points assign
    :param points: fixed evaluation points, ``None`` for random ones
    """

    factors: Tuple[RationalFunction, ...]
    basis: Tuple[Tuple[YoungDiagram, RationalFunction], ...]
    xs: Tuple[Variable, ...]
    points: Optional[Tuple[Point, ...]] = field(default=None)

    @property
    def product(self) -> RationalFunction:
        res = ONE
        for factor in self.factors:
            res = res * factor
        return res


def fixed_points(alpha: Alphabet, k: int) -> List[Point]:
    """``x_i = alpha_{s_i}`` for every k-subset ``S``, in frame order."""
    xs = [Variable(Family.X, i) for i in range(1, k + 1)]
    points = []
    for subset in all_frames(BoxContext(k, len(alpha))):
        points.append({x: alpha[s - 1] for x, s in zip(xs, subset)})
    return points


def _random_value(rng: random.Random, max_value: int) -> Fraction:
    return Fraction(rng.randint(1, max_value), rng.randint(1, max_value))


def random_points(
    xs: Sequence[Variable],
    count: int,
    rng: random.Random,
    max_value: int = OracleSettings.max_value,
) -> List[Point]:
    """
    ``count`` points with pairwise distinct coordinates and pairwise distinct
    coordinate sets, so that symmetric functions separate them.
    """
    points: List[Point] = []
    seen: Set[frozenset] = set()
    while len(points) < count:
        values = [_random_value(rng, max_value) for _ in xs]
        key = frozenset(values)
        if len(key) != len(values) or key in seen:
            continue
        seen.add(key)
        points.append({x: as_rational(v) for x, v in zip(xs, values)})
    return points


def _evaluate_at(
    problem: ExpansionProblem, point: Point
) -> Tuple[List[RationalFunction], RationalFunction]:
    row = [substitute(poly, point) for _, poly in problem.basis]
    value = ONE
    for factor in problem.factors:
        value = value * substitute(factor, point)
    return row, value


def _system(
    problem: ExpansionProblem, points: Sequence[Point]
) -> Tuple[List[List[RationalFunction]], List[RationalFunction]]:
    matrix = []
    rhs = []
    for point in points:
        row, value = _evaluate_at(problem, point)
        matrix.append(row)
        rhs.append(value)
    return matrix, rhs


def _solve_at(
    problem: ExpansionProblem, points: Sequence[Point]
) -> List[RationalFunction]:
    return solve(*_system(problem, points))


def _is_triangular(matrix: Sequence[Sequence[RationalFunction]]) -> bool:
    """Lower or upper triangular with a nonzero diagonal."""
    size = len(matrix)
    if not all(matrix[i][i] for i in range(size)):
        return False
    lower = all(not matrix[i][j] for i in range(size) for j in range(i + 1, size))
    upper = all(not matrix[i][j] for i in range(size) for j in range(i))
    return lower or upper


def _residual(
    problem: ExpansionProblem, solution: Sequence[RationalFunction]
) -> RationalFunction:
    res = problem.product
    for (_, poly), coeff in zip(problem.basis, solution):
        if coeff:
            res = res - coeff * poly
    return res


def _describe(residual: RationalFunction) -> str:
    return (
        f"{len(residual.numerator)} terms over "
        f"{len(residual.denominator)} in {len(residual.variables())} variables"
    )


def _solve_at_fixed_points(
    problem: ExpansionProblem, points: Sequence[Point]
) -> List[RationalFunction]:
    size = len(problem.basis)
    if len(points) != size:
        raise ValueError(
            f"Invalid problem with {len(points)} points for {size} unknowns"
        )
    log.debug("solving at %d fixed points", size)
    matrix, rhs = _system(problem, points)
    if not _is_triangular(matrix):
        raise NonzeroResidual(
            f"the basis does not vanish triangularly at the {size} fixed points"
        )
    solution = solve(matrix, rhs)
    for index, (row, value) in enumerate(zip(matrix, rhs)):
        total = ZERO
        for entry, coeff in zip(row, solution):
            if entry and coeff:
                total = total + entry * coeff
        if total != value:
            raise NonzeroResidual(f"the expansion misses fixed point {index}")
    return solution


def expand_in_basis(
    problem: ExpansionProblem,
    settings: Optional[OracleSettings] = None,
    rng: Optional[random.Random] = None,
) -> Dict[YoungDiagram, RationalFunction]:
    """
    Coefficients of the product in the basis, every diagram of the basis
    included.

    With fixed points the basis must vanish triangularly on them and the
    expansion is checked back at every point; with random points the
    expansion is checked symbolically.

    :raises SingularSystem: when no choice of points gives an invertible system
    :raises NonzeroResidual: when the product is not in the span of the basis
    """
    settings = settings or OracleSettings()
    size = len(problem.basis)
    if problem.points is not None:
        solution = _solve_at_fixed_points(problem, problem.points)
    else:
        rng = rng or random.Random(settings.seed)
        for attempt in range(1, settings.max_retries + 1):
            points = random_points(problem.xs, size, rng, settings.max_value)
            try:
                solution = _solve_at(problem, points)
                break
            except (SingularSystem, DenominatorVanishes) as err:
                log.warning("attempt %d: %s, drawing new points", attempt, err)
        else:
            raise SingularSystem(
                f"no invertible system in {settings.max_retries} draws"
            )
        log.debug("solved at %d random points after %d draws", size, attempt)
        residual = _residual(problem, solution)
        if not residual.is_zero():
            log.warning("expansion leaves a residual of %s", _describe(residual))
            raise NonzeroResidual(
                f"the product is not in the span of {size} basis elements"
            )
    return {diagram: coeff for (diagram, _), coeff in zip(problem.basis, solution)}


def verify_identity_randomized(
    lhs: Coercible,
    rhs: Coercible,
    settings: Optional[OracleSettings] = None,
    rng: Optional[random.Random] = None,
) -> bool:
    """
    Compare two rational functions at ``settings.trials`` random rational
    points; a point where a denominator vanishes is redrawn.

    :raises DenominatorVanishes: when every redraw of a point fails
    """
    settings = settings or OracleSettings()
    rng = rng or random.Random(settings.seed)
    left, right = as_rational(lhs), as_rational(rhs)
    variables = sorted(set(left.variables()) | set(right.variables()))
    for _ in range(settings.trials):
        for attempt in range(1, settings.max_retries + 1):
            values = {v: _random_value(rng, settings.max_value) for v in variables}
            try:
                equal = left.evaluate(values) == right.evaluate(values)
                break
            except DenominatorVanishes:
                log.warning("attempt %d: denominator vanishes, redrawing", attempt)
        else:
            raise DenominatorVanishes(
                f"no usable point in {settings.max_retries} draws"
            )
        if not equal:
            return False
    return True


def product_problem(
    rule: Rule,
    lam: YoungDiagram,
    mu: YoungDiagram,
    y: Alphabet = (),
    z: Alphabet = (),
) -> ExpansionProblem:
    """
    The product whose expansion a rule computes:

    * ``G^lam G^mu`` in ``G^nu`` (T1, T2),
    * ``G_lam G_mu`` in ``G_nu`` (T1d, T2d),
    * ``G^lam(x;y) G^mu(x;y reversed)`` in ``G^nu(x;y reversed)`` (T3),
    * ``G_lam(x;y) G_mu(x;y reversed)`` in ``G_nu(x;y reversed)`` (T3d),
    * ``G_lam(x;z) G_mu(x;y)`` in ``G_nu(x;y)`` (T2dd, T3dd).

    The points are the fixed points of the basis alphabet.
    """
    if lam.context != mu.context:
        raise ValueError(f"Invalid product of {lam.context} and {mu.context}")
    ctx = lam.context
    y = as_alphabet(y) or alphabet(Family.Y, ctx.n)
    z = as_alphabet(z) or alphabet(Family.Z, ctx.n)
    spec = RULES[rule]
    dual_basis = spec.lower
    y_rev = tuple(reversed(y))
    if rule in (Rule.T3, Rule.T3D):
        first, second, basis_alpha = y, y_rev, y_rev
    elif spec.two_alphabets:
        first, second, basis_alpha = z, y, y
    else:
        first, second, basis_alpha = y, y, y
    factors = (
        grothendieck(lam, first, dual_basis=dual_basis),
        grothendieck(mu, second, dual_basis=dual_basis),
    )
    basis = tuple(
        (nu, grothendieck(nu, basis_alpha, dual_basis=dual_basis))
        for nu in all_diagrams(ctx)
    )
    xs = tuple(Variable(Family.X, i) for i in range(1, ctx.k + 1))
    points = tuple(fixed_points(basis_alpha, ctx.k))
    return ExpansionProblem(factors, basis, xs, points)


def oracle_coefficients(
    rule: Rule,
    lam: YoungDiagram,
    mu: YoungDiagram,
    settings: Optional[OracleSettings] = None,
    y: Alphabet = (),
    z: Alphabet = (),
) -> Dict[YoungDiagram, RationalFunction]:
    """
    Nonzero coefficients of the expansion computed by ``rule``, ordered by
    frame. The counting rules are solved with symbolic ``y`` and then
    specialized to ``y = 1``.
    """
    counting = RULES[rule].scheme is None
    if counting:
        equivariant = Rule.T2D if RULES[rule].lower else Rule.T2
        problem = product_problem(equivariant, lam, mu)
    else:
        problem = product_problem(rule, lam, mu, y, z)
    solution = expand_in_basis(problem, settings)
    if counting:
        n = lam.context.n
        to_one = alphabet_bindings(alphabet_variables(n), ones(n))
        solution = {nu: substitute(c, to_one) for nu, c in solution.items()}
    return {nu: c for nu, c in solution.items() if not c.is_zero()}


def alphabet_variables(n: int, family: Family = Family.Y) -> Tuple[Variable, ...]:
    return tuple(Variable(family, i) for i in range(1, n + 1))
