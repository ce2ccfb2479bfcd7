"""
Exact Laurent polynomials and rational functions over the integers.

Everything numeric in kpuzzle flows through this module: puzzle weights,
Grothendieck polynomials, R-matrix entries and expansion coefficients.
Rational functions are not gcd-reduced; two of them are equal when their
cross products agree.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import total_ordering
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from kpuzzle.base_types import DenominatorVanishes, NotDivisible, SingularSystem

log = logging.getLogger(__name__)


class Family(IntEnum):
    """Variable families, in the order used to sort monomials."""

    X = 0
    Y = 1
    Z = 2
    GENERIC = 3

    @property
    def letter(self) -> str:
        return "xyzu"[self.value]

    @classmethod
    def from_letter(cls, letter: str) -> Family:
        idx = "xyzu".find(letter)
        if idx < 0:
            raise ValueError(f"Invalid variable family {letter}")
        return cls(idx)


@dataclass(frozen=True, order=True)
class Variable:
    family: Family
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"Invalid variable index {self.index}")

    def __str__(self) -> str:
        return f"{self.family.letter}{self.index}"


def x(index: int) -> Variable:
    return Variable(Family.X, index)


def y(index: int) -> Variable:
    return Variable(Family.Y, index)


def z(index: int) -> Variable:
    return Variable(Family.Z, index)


def u(index: int) -> Variable:
    return Variable(Family.GENERIC, index)


Powers = Tuple[Tuple[Variable, int], ...]


def _merge(left: Powers, right: Powers) -> Iterator[Tuple[Variable, int, int]]:
    """Walk two sorted power tuples together, yielding (var, left, right)."""
    i = j = 0
    while i < len(left) or j < len(right):
        if j == len(right) or (i < len(left) and left[i][0] < right[j][0]):
            yield left[i][0], left[i][1], 0
            i += 1
        elif i == len(left) or right[j][0] < left[i][0]:
            yield right[j][0], 0, right[j][1]
            j += 1
        else:
            yield left[i][0], left[i][1], right[j][1]
            i += 1
            j += 1


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """
    A Laurent monomial, stored as a tuple of ``(variable, exponent)`` pairs
    sorted by variable. Zero exponents are never stored, so the empty tuple is
    the unit monomial.

    Monomials are ordered graded lexicographically: total degree first, then
    the exponent of the smallest variable in which they differ.
    """

    powers: Powers = ()

    @classmethod
    def of(cls, exponents: Mapping[Variable, int]) -> Monomial:
        return cls(tuple(sorted((v, e) for v, e in exponents.items() if e != 0)))

    @classmethod
    def var(cls, variable: Variable, exponent: int = 1) -> Monomial:
        return cls(((variable, exponent),) if exponent else ())

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def variables(self) -> Tuple[Variable, ...]:
        return tuple(v for v, _ in self.powers)

    def exponent(self, variable: Variable) -> int:
        for var, exp in self.powers:
            if var == variable:
                return exp
        return 0

    def is_unit(self) -> bool:
        return not self.powers

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            tuple((v, l + r) for v, l, r in _merge(self.powers, other.powers) if l + r)
        )

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __pow__(self, exponent: int) -> Monomial:
        if exponent == 0:
            return Monomial()
        return Monomial(tuple((v, e * exponent) for v, e in self.powers))

    def inverse(self) -> Monomial:
        return self**-1

    def divides(self, other: Monomial) -> bool:
        """True if ``other / self`` has no negative exponent."""
        return all(l <= r for _, l, r in _merge(self.powers, other.powers))

    def gcd(self, other: Monomial) -> Monomial:
        """Componentwise minimum of exponents (may be negative)."""
        merged = _merge(self.powers, other.powers)
        return Monomial(tuple((v, min(l, r)) for v, l, r in merged if min(l, r)))

    def negative_part(self) -> Monomial:
        return Monomial(tuple((v, e) for v, e in self.powers if e < 0))

    def __lt__(self, other: Monomial) -> bool:
        if self.degree != other.degree:
            return self.degree < other.degree
        for _, left, right in _merge(self.powers, other.powers):
            if left != right:
                return left < right
        return False

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.powers)


Scalar = Union[int, Fraction]


class Polynomial:
    """
    A Laurent polynomial with integer coefficients.

    :param terms: mapping from monomials to coefficients, zero coefficients
        are dropped
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None) -> None:
        #: never holds a zero coefficient
        self._terms: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self._terms[mono] = int(coeff)

    @classmethod
    def constant(cls, value: int) -> Polynomial:
        return cls({Monomial(): value})

    @classmethod
    def variable(cls, variable: Variable, exponent: int = 1) -> Polynomial:
        return cls({Monomial.var(variable, exponent): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: int = 1) -> Polynomial:
        return cls({mono: coeff})

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> Polynomial:
        res = cls()
        res._terms = terms
        return res

    # inspection

    def items(self) -> Iterable[Tuple[Monomial, int]]:
        return self._terms.items()

    def terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in descending canonical order."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and Monomial() in self._terms
        )

    def constant_value(self) -> int:
        return self._terms.get(Monomial(), 0)

    def is_term(self) -> bool:
        return len(self._terms) == 1

    def leading_term(self) -> Tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("Invalid leading term request on zero polynomial")
        mono = max(self._terms)
        return mono, self._terms[mono]

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def variables(self) -> Tuple[Variable, ...]:
        found = set()
        for mono in self._terms:
            found.update(mono.variables)
        return tuple(sorted(found))

    def content(self) -> int:
        """Integer gcd of the coefficients, zero for the zero polynomial."""
        return math.gcd(*self._terms.values()) if self._terms else 0

    def monomial_content(self) -> Monomial:
        """Largest monomial (possibly with negative exponents) dividing self."""
        it = iter(self._terms)
        res = next(it, Monomial())
        for mono in it:
            res = res.gcd(mono)
        return res

    def degree(self, variable: Optional[Variable] = None) -> int:
        if variable is None:
            return max((m.degree for m in self._terms), default=0)
        return max((m.exponent(variable) for m in self._terms), default=0)

    # arithmetic

    def __add__(self, other: object) -> Polynomial:
        other_p = _coerce_poly(other)
        if other_p is None:
            return NotImplemented
        res = dict(self._terms)
        for mono, coeff in other_p._terms.items():
            val = res.get(mono, 0) + coeff
            if val:
                res[mono] = val
            else:
                res.pop(mono, None)
        return Polynomial._raw(res)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> Polynomial:
        other_p = _coerce_poly(other)
        if other_p is None:
            return NotImplemented
        return self + (-other_p)

    def __rsub__(self, other: object) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: object) -> Polynomial:
        other_p = _coerce_poly(other)
        if other_p is None:
            return NotImplemented
        res: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other_p._terms.items():
                mono = m1 * m2
                val = res.get(mono, 0) + c1 * c2
                if val:
                    res[mono] = val
                else:
                    del res[mono]
        return Polynomial._raw(res)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            if not self.is_term():
                raise ValueError(f"Invalid negative power of {self}")
            mono, coeff = next(iter(self._terms.items()))
            if coeff not in (1, -1):
                raise NotDivisible(f"{self} is not invertible")
            return Polynomial({mono**exponent: coeff ** (-exponent)})
        res = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            exponent >>= 1
            if exponent:
                base = base * base
        return res

    def scale(self, factor: int) -> Polynomial:
        if not factor:
            return Polynomial()
        return Polynomial._raw({m: c * factor for m, c in self._terms.items()})

    def shift(self, mono: Monomial) -> Polynomial:
        """Multiply by a monomial."""
        return Polynomial._raw({m * mono: c for m, c in self._terms.items()})

    def divide_content(self, divisor: int) -> Polynomial:
        return Polynomial._raw({m: c // divisor for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        other_p = _coerce_poly(other)
        if other_p is None:
            return NotImplemented
        return self._terms == other_p._terms

    __hash__ = None  # type: ignore[assignment]

    # substitution

    def rename(self, mapping: Mapping[Variable, Variable]) -> Polynomial:
        """Rename variables, e.g. swapping y_i and y_{i+1}."""
        res: Dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            new = Monomial.of(
                _add_exponents((mapping.get(v, v), e) for v, e in mono.powers)
            )
            res[new] = res.get(new, 0) + coeff
        return Polynomial(res)

    def evaluate(self, values: Mapping[Variable, Scalar]) -> Fraction:
        """Exact value when every variable is bound to a number."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = Fraction(coeff)
            for var, exp in mono.powers:
                if var not in values:
                    raise ValueError(f"Invalid evaluation, {var} is unbound")
                val = Fraction(values[var])
                if exp < 0 and val == 0:
                    raise DenominatorVanishes(f"{var} evaluates to zero in {self}")
                term *= val**exp
            total += term
        return total

    # text

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (mono, coeff) in enumerate(self.terms()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if mono.is_unit():
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _add_exponents(pairs: Iterable[Tuple[Variable, int]]) -> Dict[Variable, int]:
    res: Dict[Variable, int] = {}
    for var, exp in pairs:
        res[var] = res.get(var, 0) + exp
    return res


def _coerce_poly(value: object) -> Optional[Polynomial]:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return Polynomial.constant(value)
    if isinstance(value, Variable):
        return Polynomial.variable(value)
    if isinstance(value, Monomial):
        return Polynomial.from_monomial(value)
    return None


Coercible = Union[int, Fraction, Variable, Monomial, Polynomial, "RationalFunction"]


class RationalFunction:
    """
    A quotient of two Laurent polynomials.

    Monomial factors of the denominator are folded into the numerator, the
    integer content is cancelled and the leading coefficient of the
    denominator is kept positive. Laurent polynomials therefore always carry
    a constant denominator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Coercible = 0, denominator: Coercible = 1) -> None:
        if isinstance(numerator, RationalFunction) or isinstance(
            denominator, RationalFunction
        ):
            num_rf = as_rational(numerator) / as_rational(denominator)
            self.numerator: Polynomial = num_rf.numerator
            self.denominator: Polynomial = num_rf.denominator
            return
        num, num_den = _split_scalar(numerator)
        den, den_den = _split_scalar(denominator)
        num = num.scale(den_den)
        den = den.scale(num_den)
        if den.is_zero():
            raise ZeroDivisionError(f"Invalid rational function {num}/0")
        if num.is_zero():
            self.numerator = Polynomial()
            self.denominator = Polynomial.constant(1)
            return
        mono = den.monomial_content()
        if not mono.is_unit():
            inv = mono.inverse()
            den = den.shift(inv)
            num = num.shift(inv)
        common = math.gcd(num.content(), den.content())
        if den.leading_term()[1] < 0:
            common = -common
        if common != 1:
            num = num.divide_content(common)
            den = den.divide_content(common)
        self.numerator = num
        self.denominator = den

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.numerator.is_zero()

    def is_laurent(self) -> bool:
        return self.denominator.is_constant()

    def is_constant(self) -> bool:
        return self.numerator.is_constant() and self.denominator.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"Invalid constant request on {self}")
        return Fraction(
            self.numerator.constant_value(), self.denominator.constant_value()
        )

    def reduced(self) -> RationalFunction:
        """Divide out the denominator when it divides the numerator exactly."""
        if self.denominator.is_constant():
            return self
        try:
            return RationalFunction(exact_div(self.numerator, self.denominator))
        except NotDivisible:
            return self

    def as_polynomial(self) -> Polynomial:
        """The Laurent polynomial this function equals, or NotDivisible."""
        red = self.reduced()
        if not red.denominator.is_constant():
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        den = red.denominator.constant_value()
        if den == 1:
            return red.numerator
        if red.numerator.content() % den:
            raise NotDivisible(f"{self} has non-integer coefficients")
        return red.numerator.divide_content(den)

    # arithmetic

    def __add__(self, other: object) -> RationalFunction:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        rhs = as_rational(other)
        if self.denominator == rhs.denominator:
            return RationalFunction(self.numerator + rhs.numerator, self.denominator)
        return RationalFunction(
            self.numerator * rhs.denominator + rhs.numerator * self.denominator,
            self.denominator * rhs.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: object) -> RationalFunction:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        return self + (-as_rational(other))

    def __rsub__(self, other: object) -> RationalFunction:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        return as_rational(other) + (-self)

    def __mul__(self, other: object) -> RationalFunction:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        rhs = as_rational(other)
        return RationalFunction(
            self.numerator * rhs.numerator, self.denominator * rhs.denominator
        )

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("Invalid inverse of zero")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other: object) -> RationalFunction:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        return self * as_rational(other).inverse()

    def __rtruediv__(self, other: object) -> RationalFunction:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        return as_rational(other) * self.inverse()

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.numerator**exponent, self.denominator**exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _COERCIBLE):
            return NotImplemented
        rhs = as_rational(other)
        return (
            self.numerator * rhs.denominator - rhs.numerator * self.denominator
        ).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, values: Mapping[Variable, Scalar]) -> Fraction:
        den = self.denominator.evaluate(values)
        if den == 0:
            raise DenominatorVanishes(f"denominator of {self} vanishes")
        return self.numerator.evaluate(values) / den

    def variables(self) -> Tuple[Variable, ...]:
        return tuple(
            sorted(set(self.numerator.variables()) | set(self.denominator.variables()))
        )

    def __str__(self) -> str:
        num, den = self.numerator, self.denominator
        if den.is_constant():
            clear = Monomial(
                tuple((v, -e) for v, e in num.monomial_content().negative_part().powers)
            )
            if clear.is_unit() and den.constant_value() == 1:
                return str(num)
            num = num.shift(clear)
            den = den.shift(clear)
        num_text = str(num) if len(num) == 1 else f"({num})"
        single = len(den) == 1 and (
            den.is_constant()
            or (den.leading_term()[1] == 1 and len(den.variables()) == 1)
        )
        den_text = str(den) if single else f"({den})"
        return f"{num_text}/{den_text}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


_COERCIBLE = (int, Fraction, Variable, Monomial, Polynomial, RationalFunction)


def _split_scalar(value: object) -> Tuple[Polynomial, int]:
    """Polynomial numerator and integer denominator of a coercible value."""
    if isinstance(value, Fraction):
        return Polynomial.constant(value.numerator), value.denominator
    poly = _coerce_poly(value)
    if poly is None:
        raise ValueError(f"Invalid rational function operand {value!r}")
    return poly, 1


def as_rational(value: object) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)  # type: ignore[arg-type]


ONE = RationalFunction(1)
ZERO = RationalFunction(0)


_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """``a op b`` for ``op`` one of ``add``, ``sub`` or ``mul``."""
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"Invalid polynomial operation {op!r}") from None
    return fn(a, b)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    Return ``q`` with ``q * b == a``.

    Monomial content is stripped from both operands first, which turns the
    problem into a division of honest polynomials without monomial factors;
    that quotient is then found by repeated leading term cancellation.

    :raises NotDivisible: when ``b`` does not divide ``a``
    """
    if b.is_zero():
        raise ZeroDivisionError("Invalid division by the zero polynomial")
    if a.is_zero():
        return Polynomial()
    mono_a = a.monomial_content()
    mono_b = b.monomial_content()
    rem = a.shift(mono_a.inverse())
    div = b.shift(mono_b.inverse())
    lead_mono, lead_coeff = div.leading_term()
    quotient: Dict[Monomial, int] = {}
    while not rem.is_zero():
        mono, coeff = rem.leading_term()
        if coeff % lead_coeff or not lead_mono.divides(mono):
            raise NotDivisible(f"{b} does not divide {a}")
        q_mono = mono / lead_mono
        q_coeff = coeff // lead_coeff
        quotient[q_mono] = q_coeff
        rem = rem - div.shift(q_mono).scale(q_coeff)
    return Polynomial(quotient).shift(mono_a / mono_b)


Matrix = List[List[Polynomial]]


def determinant(matrix: Sequence[Sequence[Coercible]]) -> Polynomial:
    """Fraction-free Bareiss elimination with row pivoting."""
    size = len(matrix)
    rows: Matrix = []
    for row in matrix:
        if len(row) != size:
            raise ValueError(f"Invalid determinant of a non-square {size}-row matrix")
        rows.append([_poly_entry(entry) for entry in row])
    if size == 0:
        return Polynomial.constant(1)
    sign = 1
    previous = Polynomial.constant(1)
    for k in range(size - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, size):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Polynomial()
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                elt = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = exact_div(elt, previous)
        previous = pivot
    return rows[size - 1][size - 1].scale(sign)


def _poly_entry(entry: object) -> Polynomial:
    if isinstance(entry, RationalFunction):
        return entry.as_polynomial()
    poly = _coerce_poly(entry)
    if poly is None:
        raise ValueError(f"Invalid matrix entry {entry!r}")
    return poly


def demazure(
    f: Coercible, i: int, family: Family = Family.Y
) -> RationalFunction:
    """
    Divided difference ``(y_i f - y_{i+1} s_i f) / (y_i - y_{i+1})`` where
    ``s_i`` swaps ``y_i`` and ``y_{i+1}``.
    """
    if i < 1:
        raise ValueError(f"Invalid Demazure index {i}")
    fun = as_rational(f)
    lo, hi = Variable(family, i), Variable(family, i + 1)
    swap = {lo: hi, hi: lo}
    num, den = fun.numerator, fun.denominator
    s_num, s_den = num.rename(swap), den.rename(swap)
    anti = Polynomial.variable(lo) * num * s_den - Polynomial.variable(hi) * s_num * den
    quotient = exact_div(anti, Polynomial.variable(lo) - Polynomial.variable(hi))
    return RationalFunction(quotient, den * s_den)


Binding = Mapping[Variable, Coercible]


def substitute(f: Coercible, bindings: Binding) -> RationalFunction:
    """
    Simultaneous substitution of variables by rational functions.

    :raises DenominatorVanishes: when the substituted denominator is zero or a
        negative power of a variable is sent to zero
    """
    fun = as_rational(f)
    if not bindings:
        return fun
    values = {var: as_rational(val) for var, val in bindings.items()}
    cache: Dict[Tuple[Variable, int], RationalFunction] = {}
    num = _substitute_poly(fun.numerator, values, cache)
    den = _substitute_poly(fun.denominator, values, cache)
    if den.is_zero():
        raise DenominatorVanishes(f"denominator of {fun} vanishes")
    return num / den


def _substitute_poly(
    poly: Polynomial,
    values: Mapping[Variable, RationalFunction],
    cache: Dict[Tuple[Variable, int], RationalFunction],
) -> RationalFunction:
    total = ZERO
    for mono, coeff in poly.items():
        term = RationalFunction(coeff)
        rest: Dict[Variable, int] = {}
        for var, exp in mono.powers:
            if var not in values:
                rest[var] = exp
                continue
            key = (var, exp)
            if key not in cache:
                base = values[var]
                if exp < 0 and base.is_zero():
                    raise DenominatorVanishes(f"{var} is sent to zero in {poly}")
                cache[key] = base**exp
            term = term * cache[key]
        if rest:
            term = term * Monomial.of(rest)
        total = total + term
    return total


def evaluate(f: Coercible, values: Mapping[Variable, Scalar]) -> Fraction:
    return as_rational(f).evaluate(values)


# alphabets

Alphabet = Tuple[RationalFunction, ...]


def alphabet(family: Family, size: int) -> Alphabet:
    """``(v_1, ..., v_size)`` for the given family."""
    return tuple(RationalFunction(Variable(family, i)) for i in range(1, size + 1))


def reversed_alphabet(family: Family, size: int) -> Alphabet:
    return tuple(reversed(alphabet(family, size)))


def ones(size: int) -> Alphabet:
    return tuple(ONE for _ in range(size))


def as_alphabet(values: Iterable[Coercible]) -> Alphabet:
    return tuple(as_rational(v) for v in values)


def alphabet_bindings(
    source: Sequence[Variable], target: Sequence[Coercible]
) -> Dict[Variable, RationalFunction]:
    """Binding that sends ``source[i]`` to ``target[i]``."""
    if len(source) != len(target):
        raise ValueError(
            f"Invalid alphabet binding of {len(source)} to {len(target)} entries"
        )
    return {var: as_rational(val) for var, val in zip(source, target)}


# linear systems


def solve(
    matrix: Sequence[Sequence[Coercible]], rhs: Sequence[Coercible]
) -> List[RationalFunction]:
    """
    Exact solution of the square system ``matrix * sol = rhs``.

    Rows with a single remaining unknown are peeled off by substitution, so
    triangular systems never reach elimination. The remaining block has its
    row denominators cleared and is solved by Bareiss elimination followed by
    back substitution.

    :raises SingularSystem: when the system has no unique solution
    """
    size = len(matrix)
    if len(rhs) != size or any(len(row) != size for row in matrix):
        raise ValueError(f"Invalid linear system shape with {size} rows")
    rows = [[as_rational(e) for e in row] for row in matrix]
    vals = [as_rational(e) for e in rhs]
    solution: Dict[int, RationalFunction] = {}
    pending = list(range(size))
    progress = True
    while pending and progress:
        progress = False
        for r in list(pending):
            unknown = [c for c in range(size) if c not in solution and rows[r][c]]
            if len(unknown) > 1:
                continue
            if not unknown:
                continue
            col = unknown[0]
            acc = vals[r]
            for c, value in solution.items():
                if rows[r][c]:
                    acc = acc - rows[r][c] * value
            solution[col] = (acc / rows[r][col]).reduced()
            pending.remove(r)
            progress = True
    free = [c for c in range(size) if c not in solution]
    if len(free) != len(pending):
        raise SingularSystem(f"{len(pending)} equations left for {len(free)} unknowns")
    if free:
        log.debug("eliminating a %d x %d block", len(free), len(free))
        block = _reduce_block(rows, vals, pending, free, solution)
        solution.update(zip(free, block))
    return [solution[c] for c in range(size)]


def _reduce_block(
    rows: List[List[RationalFunction]],
    vals: List[RationalFunction],
    pending: List[int],
    free: List[int],
    known: Mapping[int, RationalFunction],
) -> List[RationalFunction]:
    aug: Matrix = []
    for r in pending:
        acc = vals[r]
        for c, value in known.items():
            if rows[r][c]:
                acc = acc - rows[r][c] * value
        entries = [rows[r][c] for c in free] + [acc]
        common = Polynomial.constant(1)
        for entry in entries:
            if entry.denominator != 1:
                common = common * entry.denominator
        aug.append([(entry * common).as_polynomial() for entry in entries])
    size = len(free)
    previous = Polynomial.constant(1)
    for k in range(size):
        if aug[k][k].is_zero():
            for i in range(k + 1, size):
                if not aug[i][k].is_zero():
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                raise SingularSystem(f"no pivot in column {k} of the reduced block")
        pivot = aug[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size + 1):
                elt = pivot * aug[i][j] - aug[i][k] * aug[k][j]
                aug[i][j] = exact_div(elt, previous)
            aug[i][k] = Polynomial()
        previous = pivot
    result: List[RationalFunction] = [ZERO] * size
    for i in reversed(range(size)):
        acc = RationalFunction(aug[i][size])
        for j in range(i + 1, size):
            if aug[i][j]:
                acc = acc - RationalFunction(aug[i][j]) * result[j]
        result[i] = (acc / aug[i][i]).reduced()
    return result


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyzu])(\d+)|(\S))")


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: List[Tuple[str, str]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None:
                break
            number, letter, index, other = match.groups()
            if number is not None:
                self.tokens.append(("int", number))
            elif letter is not None:
                self.tokens.append(("var", letter + index))
            elif other in "+-*/^()":
                self.tokens.append((other, other))
            else:
                raise ValueError(f"Invalid character {other!r} in {self.text!r}")
            pos = match.end()
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            raise ValueError(f"Invalid expression {self.text!r}, expected {kind}")
        self.pos += 1
        return self.tokens[self.pos - 1][1]

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ValueError(f"Invalid empty expression {self.text!r}")
        res = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"Invalid trailing input in {self.text!r}")
        return res

    def expr(self) -> RationalFunction:
        res = self.term()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())  # type: ignore[arg-type]
            rhs = self.term()
            res = res + rhs if op == "+" else res - rhs
        return res

    def term(self) -> RationalFunction:
        res = self.unary()
        while self.peek() in ("*", "/", "int", "var", "("):
            kind = self.peek()
            if kind in ("*", "/"):
                self.take(kind)  # type: ignore[arg-type]
            rhs = self.unary()
            res = res / rhs if kind == "/" else res * rhs
        return res

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.take("-")
            return -self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            negative = self.peek() == "-"
            if negative:
                self.take("-")
            exp = int(self.take("int"))
            return base ** (-exp if negative else exp)
        return base

    def atom(self) -> RationalFunction:
        kind = self.peek()
        if kind == "int":
            return RationalFunction(int(self.take("int")))
        if kind == "var":
            name = self.take("var")
            family = Family.from_letter(name[0])
            return RationalFunction(Variable(family, int(name[1:])))
        if kind == "(":
            self.take("(")
            res = self.expr()
            self.take(")")
            return res
        raise ValueError(f"Invalid expression {self.text!r}")


def parse_rational(text: str) -> RationalFunction:
    """Parse the text form of a rational function, e.g. ``-y4/y2``."""
    return _Parser(text).parse()


def parse_polynomial(text: str) -> Polynomial:
    return parse_rational(text).as_polynomial()
