import operator
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hagge import scalar
from hagge.scalar import RatFunc, ScalarDivisionError

from .conftest import N_PROPERTY

sa, sb, sc = scalar.symbols()

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


def test_rational_add():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_additive_inverse_is_canonical_zero():
    z = (sa - sb) + (sb - sa)
    assert scalar.is_zero(z)
    assert z.num.is_zero() and z.den.is_one()


def test_gcd_cancellation_on_construction():
    q = (sa**2 - sb**2) / (sa - sb)
    assert q == sa + sb
    assert q.den.is_one()


def test_division_examples():
    assert scalar.div(Fraction(1, 2), Fraction(1, 3)) == Fraction(3, 2)
    assert sa / sa == 1


@pytest.mark.parametrize("x", [Fraction(7, 3), sa + sc])
def test_division_by_zero_carries_expression(x):
    with pytest.raises(ScalarDivisionError) as info:
        scalar.div(x, 0 * sa)
    assert info.value.expression == x


def test_ratfunc_zero_divisor_raises():
    with pytest.raises(ZeroDivisionError):
        sa / (sb - sb)


def test_is_zero_examples():
    assert scalar.is_zero(Fraction(0, 1))
    assert scalar.is_zero((sa + sb) * (sa - sb) - sa**2 + sb**2)
    assert not scalar.is_zero(sa - sb)


def test_denominator_sign_convention():
    x = RatFunc(sa.num, -(sb.num))
    assert x.den.leading_coefficient() > 0
    assert x == -sa / sb


def test_reduced_pair_is_coprime():
    x = (sa * sb + sb * sc) / (sb**2 * sa + sb * sc * sa)
    assert x == (sa + sc) / (sb * sa + sc * sa)
    assert x.num.gcd(x.den).total_degree() == 0


def test_floats_refused():
    with pytest.raises(TypeError):
        scalar.rational(0.5)
    assert scalar.rational(" -7/14 ") == Fraction(-1, 2)


def test_to_str():
    assert scalar.to_str(Fraction(5, 6)) == "5/6"
    assert scalar.to_str(-7) == "-7/1"
    assert scalar.to_str(sa) == "sa"


def test_sign_of_symbolic_rejected():
    with pytest.raises(TypeError):
        scalar.sign(sa)


def test_primitive_rational():
    assert scalar.primitive((Fraction(1, 2), Fraction(-1, 3), 0)) == (3, -2, 0)


def test_primitive_symbolic_removes_common_factor():
    got = scalar.primitive((sa * (sb + 1), sa * sc / 3, sa))
    want = (3 * (sb + 1), sc, 3 + 0 * sa)
    for g, w in zip(got, want):
        assert g == w


@given(fractions, fractions, fractions)
def test_field_axioms_rational(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z


@given(*(st.integers(-20, 20) for _ in range(6)))
def test_field_axioms_ratfunc(a, b, c, d, e, f):
    x = a * sa + b
    y = c * sb + d * sa * sc
    z = e * sc**2 + f
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if not scalar.is_zero(y):
        assert (x / y) * y == x


@given(*(st.integers(-6, 6) for _ in range(4)))
def test_is_zero_matches_equality(a, b, c, d):
    p = (a * sa + b * sb) * (c * sc + d)
    q = a * c * sa * sc + a * d * sa + b * c * sb * sc + b * d * sb
    assert scalar.is_zero(p - q) == (p == q)
    r = q + 1
    assert scalar.is_zero(p - r) == (p == r) == False


OPS = [operator.add, operator.sub, operator.mul, operator.truediv]


def _tree(rng: random.Random, depth: int):
    """A random expression tree as nested tuples over leaves sa, sb, sc and small ints."""
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.6:
            return ("var", rng.choice(scalar.SIDE_SYMBOLS))
        return ("const", Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return ("op", rng.randrange(4), _tree(rng, depth - 1), _tree(rng, depth - 1))


def _eval_tree(node, leaf):
    kind = node[0]
    if kind == "var":
        return leaf(node[1])
    if kind == "const":
        return node[1]
    _, op, left, right = node
    lhs, rhs = _eval_tree(left, leaf), _eval_tree(right, leaf)
    if op == 3 and scalar.is_zero(rhs):
        raise ZeroDivisionError
    return OPS[op](lhs, rhs)


def test_homomorphism_over_random_trees():
    rng = random.Random(99)
    gens = dict(zip(scalar.SIDE_SYMBOLS, (sa, sb, sc)))
    checked = 0
    while checked < N_PROPERTY:
        tree = _tree(rng, 4)
        values = {s: Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for s in scalar.SIDE_SYMBOLS}
        try:
            symbolic = _eval_tree(tree, gens.__getitem__)
            numeric = _eval_tree(tree, values.__getitem__)
        except ZeroDivisionError:
            continue
        if not scalar.is_symbolic(symbolic):
            symbolic = 0 * sa + symbolic
        try:
            specialised = scalar.evaluate(symbolic, values)
        except ScalarDivisionError:
            continue
        assert specialised == numeric, tree
        checked += 1
