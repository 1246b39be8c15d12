"""Closed forms for the centroid start, written out by hand.

These are reference values for the construction with P = G: they never pass
through the pipeline, so agreement with it is a genuine check.  Conics are
coefficient tuples in the order (x^2, y^2, z^2, yz, zx, xy).
"""

from __future__ import annotations

from .areal import Point, Triangle


def points(t: Triangle) -> dict[str, Point]:
    a, b, c = t.squares
    ta, tb, tc = t.ta, t.tb, t.tc  # b+c-a, c+a-b, a+b-c
    return {
        "L": Point(-a, b + c, b + c),
        "M": Point(c + a, -b, c + a),
        "N": Point(a + b, a + b, -c),
        "D": Point(-(a * a + a * (b + c) + 2 * b * c), b * tc, c * tb),
        "E": Point(a * tc, -(b * b + b * (c + a) + 2 * c * a), c * ta),
        "F": Point(a * tb, b * ta, -(c * c + c * (a + b) + 2 * a * b)),
        "Q": Point(a / ta, b / tb, c / tc),
        "L'": Point(-1, 2 * b / tb, 2 * c / tc),
        "M'": Point(2 * a / ta, -1, 2 * c / tc),
        "N'": Point(2 * a / ta, 2 * b / tb, -1),
        "P1": Point(2 * a, a - b - c, a - b - c),
        "P2": Point(b - c - a, 2 * b, b - c - a),
        "P3": Point(c - a - b, c - a - b, 2 * c),
        "H": Point(1 / ta, 1 / tb, 1 / tc),
        "U": Point(a, 2 * c - a, 2 * b - a),
        "V": Point(2 * c - b, b, 2 * a - b),
        "W": Point(2 * b - c, 2 * a - c, c),
        "U'": Point(
            1,
            -(a * a - 2 * a * b - (b - c) ** 2) / (a * tb),
            -(a * a - 2 * c * a - (b - c) ** 2) / (a * tc),
        ),
        "V1": Point(
            (a + 3 * (b - c)) / tb,
            -2 * b / tb,
            -2 * (a * a - 3 * a * c - b * (b - c)) / (tc * tb),
        ),
        "V3": Point(
            2 * (a * (b - 3 * c) - (b + c) * (b - c)) / ((a - b - c) * tb),
            -2 * b / tb,
            (3 * b + c - 3 * a) / tb,
        ),
    }


def polar_of_q(t: Triangle) -> tuple:
    return (t.ta, t.tb, t.tc)


def hagge_circle_of_centroid(t: Triangle) -> tuple:
    a, b, c = t.squares
    return (
        a * t.ta,
        b * t.tb,
        c * t.tc,
        -(a * a + (b - c) ** 2),
        -(b * b + (c - a) ** 2),
        -(c * c + (a - b) ** 2),
    )


def hagge_circle_of_q(t: Triangle) -> tuple:
    a, b, c = t.squares
    return (
        t.ta**2,
        t.tb**2,
        t.tc**2,
        a * a - a * (b + c) + 2 * (b - c) ** 2,
        b * b - b * (c + a) + 2 * (c - a) ** 2,
        c * c - c * (a + b) + 2 * (a - b) ** 2,
    )


def circle_cha(t: Triangle) -> tuple:
    a, b, c = t.squares
    zero = 0 * a
    return (zero, t.tb, zero, c - b, -b, a - b)


CONICS = {
    "UVW": hagge_circle_of_centroid,
    "U'V'W'": hagge_circle_of_q,
    "CHA": circle_cha,
}
