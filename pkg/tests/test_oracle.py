import random

import pytest

from kpuzzle.algebra import Family, Variable, alphabet
from kpuzzle.base_types import NonzeroResidual
from kpuzzle.coeffs import CoeffQuery, Rule, coefficient, expand, stability_bound
from kpuzzle.grothendieck import grothendieck
from kpuzzle.oracle import (
    ExpansionProblem,
    expand_in_basis,
    fixed_points,
    oracle_coefficients,
    product_problem,
    random_points,
    verify_identity_randomized,
)
from kpuzzle.young import YoungDiagram, all_diagrams
from tests.utils import diagram, expansion, rf, same_expansion


class TestPoints:
    def test_fixed_points(self):
        y = alphabet(Family.Y, 4)
        points = fixed_points(y, 2)
        assert len(points) == 6
        assert points[0] == {Variable(Family.X, 1): y[0], Variable(Family.X, 2): y[1]}

    def test_random_points_are_distinct(self, rng):
        xs = [Variable(Family.X, 1), Variable(Family.X, 2)]
        points = random_points(xs, 10, rng, max_value=5)
        keys = [frozenset(p.values()) for p in points]
        assert len(points) == 10
        assert all(len(key) == 2 for key in keys)


class TestIdentities:
    def test_equal(self, oracle_settings):
        assert verify_identity_randomized(
            rf("(x1 + y1)^2"), rf("x1^2 + 2*x1*y1 + y1^2"), oracle_settings
        )

    def test_different(self, oracle_settings):
        assert not verify_identity_randomized(
            rf("(x1 + y1)^2"), rf("x1^2 + y1^2"), oracle_settings
        )

    def test_rational(self, oracle_settings, rng):
        lhs = rf("1/(x1 - y1) - 1/(x1 + y1)")
        rhs = rf("2*y1/(x1^2 - y1^2)")
        assert verify_identity_randomized(lhs, rhs, oracle_settings, rng)


class TestExpansion:
    def test_box_squared(self, gr24):
        box = diagram("1", 2, 4)
        assert same_expansion(
            oracle_coefficients(Rule.T1, box, box),
            expansion(gr24, p2="1", p1_1="1", p2_1="-1"),
        )

    def test_single_coefficient(self):
        lam, mu, nu = (diagram(t, 2, 5) for t in ("3,1", "3,2", "2"))
        found = oracle_coefficients(Rule.T2D, lam, mu)
        assert found[nu] == coefficient(CoeffQuery(Rule.T2D, lam, mu, nu))

    def test_two_alphabets(self, oracle_settings):
        two = diagram("2", 1, 3)
        assert same_expansion(
            oracle_coefficients(Rule.T2DD, two, two, oracle_settings),
            expansion(two.context, p1="-y2/z3", p2="y3/z3"),
        )

    def test_open_polynomial_identity(self, oracle_settings, caplog):
        empty = YoungDiagram.empty(diagram("", 1, 3).context)
        problem = product_problem(Rule.T2DD, empty, empty)
        free = ExpansionProblem(problem.factors, problem.basis, problem.xs)
        with pytest.raises(NonzeroResidual):
            expand_in_basis(free, oracle_settings)
        assert "terms over" in caplog.text

    def test_swapped_basis(self, gr24):
        box = diagram("1", 2, 4)
        problem = product_problem(Rule.T2, box, box)
        basis = list(problem.basis)
        (first, first_poly), (second, second_poly) = basis[1], basis[2]
        basis[1], basis[2] = (first, second_poly), (second, first_poly)
        broken = ExpansionProblem(
            problem.factors, tuple(basis), problem.xs, problem.points
        )
        with pytest.raises(NonzeroResidual) as excinfo:
            expand_in_basis(broken)
        assert "triangularly" in str(excinfo.value)

    def test_misplaced_point(self, gr24):
        box = diagram("1", 2, 4)
        problem = product_problem(Rule.T2D, box, box)
        points = (problem.points[1],) + problem.points[1:]
        broken = ExpansionProblem(problem.factors, problem.basis, problem.xs, points)
        with pytest.raises(NonzeroResidual):
            expand_in_basis(broken)

    def test_point_count(self, gr24):
        box = diagram("1", 2, 4)
        problem = product_problem(Rule.T2, box, box)
        broken = ExpansionProblem(
            problem.factors, problem.basis, problem.xs, problem.points[:3]
        )
        with pytest.raises(ValueError):
            expand_in_basis(broken)

    def test_all_basis_entries(self, gr24):
        box = diagram("1", 2, 4)
        found = expand_in_basis(product_problem(Rule.T2, box, box))
        assert list(found) == all_diagrams(gr24)
        assert found[YoungDiagram.empty(gr24)] == 0

    def test_random_points_match_fixed_points(self, gr24, oracle_settings):
        box = diagram("1", 2, 4)
        problem = product_problem(Rule.T2, box, box)
        free = ExpansionProblem(problem.factors, problem.basis, problem.xs)
        fixed = expand_in_basis(problem)
        randomized = expand_in_basis(free, oracle_settings, random.Random(3))
        assert same_expansion(fixed, randomized)

    def test_product(self, gr24):
        box = diagram("1", 2, 4)
        problem = product_problem(Rule.T2, box, box)
        assert problem.product == grothendieck(box) ** 2

    def test_mixed_boxes(self, gr24, gr25):
        with pytest.raises(ValueError):
            product_problem(Rule.T2, YoungDiagram.empty(gr24), YoungDiagram.empty(gr25))


@pytest.mark.parametrize(
    "rule", [Rule.T1, Rule.T1D, Rule.T2, Rule.T2D, Rule.T3, Rule.T3D]
)
def test_puzzles_match_oracle(gr24, rule):
    for lam in all_diagrams(gr24):
        for mu in all_diagrams(gr24):
            assert same_expansion(
                expand(rule, lam, mu), oracle_coefficients(rule, lam, mu)
            ), (rule, lam, mu)


@pytest.mark.parametrize("rule", [Rule.T2DD, Rule.T3DD])
def test_two_alphabet_puzzles_match_oracle(gr14, rule):
    for lam in all_diagrams(gr14):
        for mu in all_diagrams(gr14):
            assert same_expansion(
                expand(rule, lam, mu), oracle_coefficients(rule, lam, mu)
            ), (rule, lam, mu)


@pytest.mark.parametrize("rule", [Rule.T2DD, Rule.T3DD])
def test_two_alphabets_in_stable_range(rule):
    box = diagram("1", 1, 8)
    assert box.context.n >= stability_bound(box, box, 1)
    assert same_expansion(expand(rule, box, box), oracle_coefficients(rule, box, box))
