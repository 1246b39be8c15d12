import random
from fractions import Fraction

import pytest

from hagge import scalar
from hagge.areal import Point, Triangle
from hagge.reflect import REFLECTIONS, reflect_ab, reflect_bc, reflect_ca

from .conftest import N_PROPERTY, random_point, random_triangle

MIRROR_INDEX = {"BC": 0, "CA": 1, "AB": 2}
MIRROR_ENDS = {
    "BC": (Point(0, 1, 0), Point(0, 0, 1)),
    "CA": (Point(0, 0, 1), Point(1, 0, 0)),
    "AB": (Point(1, 0, 0), Point(0, 1, 0)),
}


def _normalized(p):
    s = sum(p.coords)
    return [c / s for c in p]


def _perpendicular(t, d1, d2):
    """Areal perpendicularity of two displacement vectors (each summing to zero)."""
    sa, sb, sc = t.squares
    (u1, v1, w1), (u2, v2, w2) = d1, d2
    return sa * (v1 * w2 + w1 * v2) + sb * (w1 * u2 + u1 * w2) + sc * (u1 * v2 + v1 * u2)


def test_reflect_l_in_bc(t456):
    U = reflect_bc(t456, Point(-4, 11, 11))
    assert U.equiv(Point(4, 8, 6))
    # (a², 2c²−a², 2b²−a²)
    assert U.equiv(Point(4, 2 * 6 - 4, 2 * 5 - 4))


def test_points_of_bc_fixed(t456):
    p = Point(0, 3, -7)
    assert reflect_bc(t456, p).coords == p.coords


def test_reflect_l_prime_in_ca(t456):
    V1 = reflect_ca(t456, Point(-1, 2, 4))
    a, b, c = 4, 5, 6
    x = Fraction(a + 3 * (b - c), c + a - b)
    y = Fraction(-2 * b, c + a - b)
    z = Fraction(-2 * (a * a - 3 * a * c - b * (b - c)), (a + b - c) * (c + a - b))
    assert (x, y, z) == (Fraction(1, 5), -2, Fraction(34, 5))
    assert V1.equiv(Point(x, y, z))
    assert V1.equiv(Point(1, -10, 34))


def test_symbolic_reflections_match_closed_form_v1_v3():
    t = Triangle.symbolic()
    a, b, c = t.squares
    ta, tb, tc = t.ta, t.tb, t.tc
    L2 = Point(-1 + 0 * a, 2 * b / tb, 2 * c / tc)
    N2 = Point(2 * a / ta, 2 * b / tb, -1 + 0 * a)
    V1 = Point((a + 3 * (b - c)) / tb, -2 * b / tb, -2 * (a * a - 3 * a * c - b * (b - c)) / (tc * tb))
    V3 = Point(2 * (a * (b - 3 * c) - (b + c) * (b - c)) / ((a - b - c) * tb), -2 * b / tb, (3 * b + c - 3 * a) / tb)
    assert reflect_ca(t, L2).equiv(V1)
    assert reflect_ca(t, N2).equiv(V3)


def _generic():
    sa, sb, sc, l, m, n = scalar.symbols(*scalar.SIDE_SYMBOLS, *scalar.POINT_SYMBOLS)
    return Triangle(sa, sb, sc), Point(l, m, n)


@pytest.mark.parametrize("side", ["BC", "CA", "AB"])
def test_symbolic_involution(side):
    t, p = _generic()
    f = REFLECTIONS[side]
    assert f(t, f(t, p)).equiv(p)


def test_symbolic_coordinate_sum_preserved():
    t, p = _generic()
    for fn in (reflect_bc, reflect_ca, reflect_ab):
        assert sum(fn(t, p).coords, 0 * t.sa) == sum(p.coords, 0 * t.sa)


@pytest.mark.parametrize("side", ["BC", "CA", "AB"])
def test_property_involution(side):
    rng = random.Random(10 + MIRROR_INDEX[side])
    f = REFLECTIONS[side]
    for _ in range(N_PROPERTY):
        t = random_triangle(rng)
        p = random_point(rng)
        assert f(t, f(t, p)).equiv(p)


@pytest.mark.parametrize("side", ["BC", "CA", "AB"])
def test_property_coordinate_sum_preserved(side):
    rng = random.Random(20 + MIRROR_INDEX[side])
    f = REFLECTIONS[side]
    for _ in range(N_PROPERTY):
        t = random_triangle(rng)
        p = random_point(rng)
        assert sum(f(t, p).coords) == sum(p.coords)


@pytest.mark.parametrize("side", ["BC", "CA", "AB"])
def test_property_midpoint_on_mirror_and_perpendicular(side):
    rng = random.Random(30 + MIRROR_INDEX[side])
    f = REFLECTIONS[side]
    i = MIRROR_INDEX[side]
    e1, e2 = MIRROR_ENDS[side]
    mirror = [x - y for x, y in zip(e1, e2)]
    done = 0
    while done < N_PROPERTY:
        t = random_triangle(rng)
        p = random_point(rng)
        if sum(p.coords) == 0:
            continue
        q = f(t, p)
        pn, qn = _normalized(p), _normalized(q)
        mid = [(x + y) / 2 for x, y in zip(pn, qn)]
        assert mid[i] == 0
        assert _perpendicular(t, [x - y for x, y in zip(pn, qn)], mirror) == 0
        done += 1
