"""Exact scalars: rationals and multivariate rational functions.

Two realizations share one small functional surface so that the geometry
code never has to know which one it is holding:

* ``Fraction`` from the standard library (numerator/denominator in lowest
  terms, positive denominator).
* ``RatFunc``, a quotient of sparse integer polynomials in a fixed tuple of
  indeterminates, graded-lexicographic order.  Numerator and denominator
  are kept coprime and the denominator's leading coefficient is positive,
  so equality is a representation check and zero is ``0/1``.

Both mix with Python ints under ``+ - * / **``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Union

import flint

SIDE_SYMBOLS = ("sa", "sb", "sc")
POINT_SYMBOLS = ("l", "m", "n")


class ScalarDivisionError(ZeroDivisionError):
    """Division by an exact zero.  ``expression`` holds the dividend."""

    def __init__(self, expression):
        self.expression = expression
        super().__init__(f"division by zero (dividend: {to_str(expression)})")


@lru_cache(maxsize=None)
def polynomial_context(names: tuple[str, ...] = SIDE_SYMBOLS):
    return flint.fmpz_mpoly_ctx.get(tuple(names), "deglex")


class RatFunc:
    """Element of Q(x1, ..., xk), stored as a reduced ``num/den`` pair."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        if den is None:
            den = num.context().constant(1)
        if not reduced:
            if den.is_zero():
                raise ScalarDivisionError(RatFunc(num, reduced=True))
            if num.is_zero():
                den = den.context().constant(1)
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num / g, den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @property
    def context(self):
        return self.num.context()

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.context.names()

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.context is not self.context:
                raise TypeError("rational functions over different indeterminates")
            return other
        if isinstance(other, int):
            return RatFunc(self.context.constant(other), reduced=True)
        if isinstance(other, Fraction):
            ctx = self.context
            return RatFunc(ctx.constant(other.numerator), ctx.constant(other.denominator), reduced=True)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        left, right = self.den / g, other.den / g
        return RatFunc(self.num * right + other.num * left, self.den * right)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(self.context.constant(0), reduced=True)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num / g1) * (other.num / g2)
        den = (self.den / g2) * (other.den / g1)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ScalarDivisionError(RatFunc(self.context.constant(1), reduced=True))
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den, reduced=True)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ScalarDivisionError(self)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, reduced=True)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.num.is_constant() and self.den.is_constant():
            return hash(_constant(self.num) / _constant(self.den))
        return hash((str(self.num), str(self.den)))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({to_str(self)})"

    def size(self) -> int:
        return len(self.num.coeffs()) + len(self.den.coeffs())


Rational = Fraction
Scalar = Union[Fraction, RatFunc]


def symbols(*names: str) -> tuple[RatFunc, ...]:
    """Indeterminates over ``names`` (default: the squared side lengths)."""
    ctx = polynomial_context(tuple(names or SIDE_SYMBOLS))
    return tuple(RatFunc(g, reduced=True) for g in ctx.gens())


def rational(value) -> Fraction:
    """Parse ``3``, ``"3/4"``, ``"-2"`` or a Fraction into a Fraction.

    Floats are refused: nothing in the exact core may come from one.
    """
    if isinstance(value, float):
        raise TypeError("floating-point input is not exact")
    if isinstance(value, str):
        value = value.strip()
    return Fraction(value)


def is_symbolic(x) -> bool:
    return isinstance(x, RatFunc)


def is_zero(x) -> bool:
    if isinstance(x, RatFunc):
        return x.num.is_zero()
    return x == 0


def div(x, y):
    if is_zero(y):
        raise ScalarDivisionError(x)
    return x / y


def sign(x) -> int:
    """Sign of a Rational; symbolic scalars carry no order."""
    if isinstance(x, RatFunc):
        raise TypeError("rational functions are not ordered")
    return (x > 0) - (x < 0)


def size(x) -> int:
    """Monomials in numerator plus denominator (1 for rationals)."""
    return x.size() if isinstance(x, RatFunc) else 1


def evaluate(x, values: Mapping[str, Fraction]) -> Fraction:
    """Substitute rationals for every indeterminate of a rational function.

    Raises ScalarDivisionError when the denominator vanishes at ``values``.
    """
    if not isinstance(x, RatFunc):
        return Fraction(x)
    gens = [Fraction(values[name]) for name in x.symbols]
    num = _eval_poly(x.num, gens)
    den = _eval_poly(x.den, gens)
    if den == 0:
        raise ScalarDivisionError(x)
    return num / den


def _constant(poly) -> Fraction:
    coeffs = poly.coeffs()
    return Fraction(int(coeffs[0]) if coeffs else 0)


def _eval_poly(poly, gens) -> Fraction:
    total = Fraction(0)
    for monom, coeff in poly.terms():
        term = Fraction(int(coeff))
        for g, e in zip(gens, monom):
            if e:
                term *= g ** int(e)
        total += term
    return total


def primitive(values) -> tuple:
    """Divide a homogeneous tuple by its content.

    Rationals become coprime integers; rational functions become coprime
    polynomials.  The result is proportional to the input, which is all a
    projective object needs.
    """
    values = tuple(values)
    ref = next((v for v in values if isinstance(v, RatFunc)), None)
    if ref is not None:
        return _primitive_symbolic(tuple(ref._lift(v) for v in values))
    values = [Fraction(v) for v in values]
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for i in ints:
        g = gcd(g, i)
    if g == 0:
        return tuple(values)
    return tuple(Fraction(i // g) for i in ints)


def _primitive_symbolic(values: tuple) -> tuple:
    ctx = values[0].context
    den = ctx.constant(1)
    for v in values:
        den = den * (v.den / den.gcd(v.den))
    polys = [v.num * (den / v.den) for v in values]
    g = ctx.constant(0)
    for p in polys:
        g = g.gcd(p)
    if g.is_zero():
        return values
    return tuple(RatFunc(p / g, reduced=True) for p in polys)


def to_str(x) -> str:
    """Serialize as ``num/den``; rationals always carry the denominator."""
    if isinstance(x, RatFunc):
        if x.den.is_one():
            return str(x.num)
        return f"({x.num})/({x.den})"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
