"""Reflections of an areal point in the sidelines of the reference triangle.

Closed forms only; no perpendicular feet are ever constructed.  The maps are
homogeneous of degree one and preserve the coordinate sum of the input.
"""

from __future__ import annotations

from .areal import Point, Triangle
from .scalar import div


def reflect_bc(t: Triangle, p: Point) -> Point:
    d, e, f = p
    return Point(-d, e + div(d * t.tc, t.sa), f + div(d * t.tb, t.sa))


def reflect_ca(t: Triangle, p: Point) -> Point:
    d, e, f = p
    return Point(d + div(e * t.tc, t.sb), -e, f + div(e * t.ta, t.sb))


def reflect_ab(t: Triangle, p: Point) -> Point:
    d, e, f = p
    return Point(d + div(f * t.tb, t.sc), e + div(f * t.ta, t.sc), -f)


REFLECTIONS = {"BC": reflect_bc, "CA": reflect_ca, "AB": reflect_ab}
