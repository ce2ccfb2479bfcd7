"""
Double Grothendieck polynomials of Grassmannian permutations and their duals.

Three constructions are provided and cross-checked by the test suite: the
inductive one through Demazure operators, the determinant formulas and the
five-vertex lattice. Each is computed once with the symbolic alphabet
``y1..yn`` and then specialized to the alphabet of the query.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from kpuzzle.algebra import (
    Alphabet,
    Coercible,
    Family,
    Polynomial,
    RationalFunction,
    Variable,
    alphabet as family_alphabet,
    as_alphabet,
    demazure,
    determinant,
    exact_div,
    substitute,
)
from kpuzzle.base_types import Frame, StateSpaceTooLarge
from kpuzzle.vertexmodel import RMatrixRank1
from kpuzzle.young import BoxContext, YoungDiagram, diagram_of_frame, dual

log = logging.getLogger(__name__)

DEFAULT_MAX_SITES = 16


@dataclass(frozen=True, eq=False)
class GrothQuery:
    """
    :param diagram: the Young diagram, its box fixes ``k`` and ``n``
    :param alphabet: the ``n`` equivariant parameters, symbolic ``y`` by
        default; entries may be variables, constants or rational functions
    :param xs: the ``k`` main variables, ``x1..xk`` by default
    """

    diagram: YoungDiagram
    alphabet: Alphabet = field(default=())
    xs: Alphabet = field(default=())

    def __post_init__(self) -> None:
        ctx = self.diagram.context
        alpha = as_alphabet(self.alphabet) or family_alphabet(Family.Y, ctx.n)
        xs = as_alphabet(self.xs) or family_alphabet(Family.X, ctx.k)
        if len(alpha) != ctx.n:
            raise ValueError(f"Invalid alphabet of length {len(alpha)} for {ctx}")
        if any(a.is_zero() for a in alpha):
            raise ValueError("Invalid alphabet with a zero entry")
        if len(xs) != ctx.k:
            raise ValueError(f"Invalid x alphabet of length {len(xs)} for {ctx}")
        object.__setattr__(self, "alphabet", alpha)
        object.__setattr__(self, "xs", xs)

    @property
    def context(self) -> BoxContext:
        return self.diagram.context

    def specialize(self, symbolic: RationalFunction) -> RationalFunction:
        """Send ``y_i`` and ``x_i`` of a symbolic result to the query values."""
        bindings: Dict[Variable, RationalFunction] = {}
        for i, value in enumerate(self.alphabet, start=1):
            var = Variable(Family.Y, i)
            if value != RationalFunction(var):
                bindings[var] = value
        for i, value in enumerate(self.xs, start=1):
            var = Variable(Family.X, i)
            if value != RationalFunction(var):
                bindings[var] = value
        return substitute(symbolic, bindings) if bindings else symbolic


def _x(i: int) -> Polynomial:
    return Polynomial.variable(Variable(Family.X, i))


def _one_minus(i: int, m: int) -> Polynomial:
    """``1 - x_i / y_m``."""
    return 1 - _x(i) * Polynomial.variable(Variable(Family.Y, m), -1)


def _vandermonde(k: int) -> Polynomial:
    res = Polynomial.constant(1)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            res = res * (_x(i) - _x(j))
    return res


def _top_frame(k: int, n: int) -> Frame:
    return tuple(range(n - k + 1, n + 1))


def _full_box(k: int, n: int) -> Polynomial:
    res = Polynomial.constant(1)
    for i in range(1, k + 1):
        for j in range(1, n - k + 1):
            res = res * _one_minus(i, j)
    return res


def reduction_path(start: Frame, target: Frame) -> List[int]:
    """
    Demazure indices lowering ``start`` to ``target``, always lowering the
    largest entry that can move.
    """
    if len(start) != len(target) or any(s < t for s, t in zip(start, target)):
        raise ValueError(f"Invalid reduction from {start} to {target}")
    current = list(start)
    path = []
    while current != list(target):
        for idx in reversed(range(len(current))):
            entry = current[idx]
            if entry > target[idx] and entry - 1 not in current:
                current[idx] = entry - 1
                path.append(entry - 1)
                break
    return path


@lru_cache(maxsize=None)
def _inductive(frame: Frame, k: int, n: int, path: Tuple[int, ...]) -> RationalFunction:
    current = list(_top_frame(k, n))
    res = RationalFunction(_full_box(k, n))
    for i in path:
        if i + 1 not in current or i in current:
            raise ValueError(f"Invalid Demazure step {i} from frame {tuple(current)}")
        current[current.index(i + 1)] = i
        res = demazure(res, i)
    if tuple(current) != frame:
        raise ValueError(f"Invalid path {path}, it ends at {tuple(current)}")
    return res


def groth_inductive(
    q: GrothQuery, path: Optional[Sequence[int]] = None
) -> RationalFunction:
    """
    ``G^lam`` from the full box polynomial by Demazure operators.

    :param path: Demazure indices to apply, each replacing ``i+1`` by ``i`` in
        the frame; by default the largest movable entry is lowered first
    """
    ctx = q.context
    frame = q.diagram.frame
    if path is None:
        path = reduction_path(_top_frame(ctx.k, ctx.n), frame)
    return q.specialize(_inductive(frame, ctx.k, ctx.n, tuple(path)))


@lru_cache(maxsize=None)
def _determinant(frame: Frame, k: int) -> RationalFunction:
    rows = []
    for i, ell in enumerate(frame, start=1):
        row = []
        for j in range(1, k + 1):
            entry = _x(j) ** (k - i)
            for m in range(1, ell):
                entry = entry * _one_minus(j, m)
            row.append(entry)
        rows.append(row)
    return RationalFunction(exact_div(determinant(rows), _vandermonde(k)))


def groth_det(q: GrothQuery) -> RationalFunction:
    """``det(x_j^{k-i} prod_{m<l_i} (1 - x_j/y_m)) / prod_{i<j} (x_i - x_j)``."""
    return q.specialize(_determinant(q.diagram.frame, q.context.k))


def _reverse_bindings(n: int) -> Dict[Variable, RationalFunction]:
    return {
        Variable(Family.Y, i): RationalFunction(Variable(Family.Y, n + 1 - i))
        for i in range(1, n + 1)
    }


def _prefactor(frame: Frame, k: int) -> RationalFunction:
    """``prod x_i / prod_{i in frame} y_i``."""
    res = Polynomial.constant(1)
    for i in range(1, k + 1):
        res = res * _x(i)
    for i in frame:
        res = res * Polynomial.variable(Variable(Family.Y, i), -1)
    return RationalFunction(res)


@lru_cache(maxsize=None)
def _dual_definition(frame: Frame, k: int, n: int) -> RationalFunction:
    star = dual(diagram_of_frame(frame, BoxContext(k, n)))
    path = tuple(reduction_path(_top_frame(k, n), star.frame))
    plain = _inductive(star.frame, k, n, path)
    return _prefactor(frame, k) * substitute(plain, _reverse_bindings(n))


@lru_cache(maxsize=None)
def _dual_determinant(frame: Frame, k: int, n: int) -> RationalFunction:
    rows = []
    for i, ell in enumerate(frame, start=1):
        row = []
        for j in range(1, k + 1):
            entry = _x(j) ** (i - 1)
            for m in range(ell + 1, n + 1):
                entry = entry * _one_minus(j, m)
            row.append(entry)
        rows.append(row)
    # prod_{i<j} (x_j - x_i) is the Vandermonde with sign (-1)^{k(k-1)/2}
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    quotient = exact_div(determinant(rows), _vandermonde(k)).scale(sign)
    pref = Polynomial.constant(1)
    for i, ell in enumerate(frame, start=1):
        pref = pref * _x(i) * Polynomial.variable(Variable(Family.Y, ell), -1)
    return RationalFunction(pref * quotient)


def dual_groth(q: GrothQuery, method: str = "definition") -> RationalFunction:
    """
    ``G_lam = prod x_i prod_{i in lam} y_i^-1 G^{lam*}(x; y reversed)``.

    :param method: ``"definition"`` or ``"determinant"``
    """
    ctx = q.context
    frame = q.diagram.frame
    if method == "definition":
        symbolic = _dual_definition(frame, ctx.k, ctx.n)
    elif method == "determinant":
        symbolic = _dual_determinant(frame, ctx.k, ctx.n)
    else:
        raise ValueError(f"Invalid dual Grothendieck method {method}")
    return q.specialize(symbolic)


# lattice

State = Dict[int, Polynomial]


def _check_sites(n: int, max_sites: int) -> None:
    if n > max_sites:
        raise StateSpaceTooLarge(f"{n} sites exceed the limit of {max_sites}")


def _mask(frame: Frame) -> int:
    return sum(1 << (i - 1) for i in frame)


def _transfer_row(
    state: State, row: int, n: int, aux_in: int, aux_out: int
) -> State:
    """
    Pass an auxiliary line with spectral parameter ``x_row`` through sites
    ``n, n-1, ..., 1`` and keep the histories ending with ``aux_out``.
    """
    matrix = RMatrixRank1()
    moves = [
        matrix.transitions(
            RationalFunction(Variable(Family.X, row)) / Variable(Family.Y, site)
        )
        for site in range(1, n + 1)
    ]
    result: State = {}
    for mask, amp in state.items():
        branches: List[Tuple[int, int, Polynomial]] = [(aux_in, mask, amp)]
        for site in range(n, 0, -1):
            bit = 1 << (site - 1)
            nxt = []
            for aux, cur, val in branches:
                occ = 1 if cur & bit else 0
                for new_aux, new_occ, weight in moves[site - 1][(aux, occ)]:
                    moved = (cur & ~bit) | (bit if new_occ else 0)
                    nxt.append((new_aux, moved, val * weight))
            branches = nxt
        for aux, cur, val in branches:
            if aux == aux_out:
                total = result.get(cur, Polynomial()) + val
                if total:
                    result[cur] = total
                else:
                    result.pop(cur, None)
    return result


@lru_cache(maxsize=None)
def _lattice(frame: Frame, k: int, n: int, dual_basis: bool) -> RationalFunction:
    if dual_basis:
        state: State = {0: Polynomial.constant(1)}
        for row in range(1, k + 1):
            state = _transfer_row(state, row, n, aux_in=1, aux_out=0)
        return RationalFunction(state.get(_mask(frame), Polynomial()))
    state = {_mask(frame): Polynomial.constant(1)}
    for row in range(1, k + 1):
        state = _transfer_row(state, row, n, aux_in=0, aux_out=1)
    log.debug("lattice for frame %s left %d states", frame, len(state))
    return RationalFunction(state.get(0, Polynomial()))


def groth_lattice(
    q: GrothQuery, max_sites: int = DEFAULT_MAX_SITES
) -> RationalFunction:
    """``G^lam = <0| C(x_1) ... C(x_k) |lam>`` in the five-vertex model."""
    ctx = q.context
    _check_sites(ctx.n, max_sites)
    return q.specialize(_lattice(q.diagram.frame, ctx.k, ctx.n, False))


def dual_groth_lattice(
    q: GrothQuery, max_sites: int = DEFAULT_MAX_SITES
) -> RationalFunction:
    """``G_lam = <lam| B(x_1) ... B(x_k) |0>`` in the five-vertex model."""
    ctx = q.context
    _check_sites(ctx.n, max_sites)
    return q.specialize(_lattice(q.diagram.frame, ctx.k, ctx.n, True))


def grothendieck(
    lam: YoungDiagram,
    alpha: Optional[Sequence[Coercible]] = None,
    xs: Optional[Sequence[Coercible]] = None,
    dual_basis: bool = False,
) -> RationalFunction:
    """``G^lam`` (or ``G_lam``) through the determinant formulas."""
    query = GrothQuery(lam, as_alphabet(alpha or ()), as_alphabet(xs or ()))
    if dual_basis:
        return dual_groth(query, method="determinant")
    return groth_det(query)
