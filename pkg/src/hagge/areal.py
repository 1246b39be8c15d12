"""Areal (barycentric) coordinates relative to a reference triangle ABC.

Points and lines are homogeneous triples over an exact field.  Nothing here
ever normalizes a triple to compare it: two triples are the same projective
object exactly when every 2x2 minor of the pair vanishes.

Circles are the pencil

    sa*y*z + sb*z*x + sc*x*y + (u*x + v*y + w*z)*(x + y + z) = 0

and are stored by their linear part (u, v, w); (0, 0, 0) is the circumcircle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import scalar
from .scalar import div, is_zero


class GeometryError(ValueError):
    pass


class CoincidentError(GeometryError):
    """Two points (or two lines) are projectively the same."""


class NotOnCircleError(GeometryError):
    pass


class SingularSystemError(GeometryError):
    """Three points do not determine a circle of the pencil."""


class SidelineError(GeometryError):
    """A point lies on a sideline where a conjugation is undefined."""


class InvalidTriangleError(GeometryError):
    pass


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        coords = tuple(c if scalar.is_symbolic(c) else scalar.rational(c) for c in (x, y, z))
        if all(is_zero(c) for c in coords):
            raise GeometryError(f"{type(self).__name__} with all coordinates zero")
        self.coords = coords

    def __iter__(self) -> Iterator:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self) -> str:
        body = ", ".join(scalar.to_str(c) for c in self.coords)
        return f"{type(self).__name__}({body})"

    def minors(self, other: "_Triple") -> tuple:
        (a, b, c), (d, e, f) = self.coords, other.coords
        return (b * f - c * e, c * d - a * f, a * e - b * d)

    def equiv(self, other: "_Triple") -> bool:
        """Projective equality."""
        return all(is_zero(m) for m in self.minors(other))

    def scaled(self, k) -> "_Triple":
        return type(self)(*(k * c for c in self.coords))

    def primitive(self) -> "_Triple":
        """Proportional triple with the content divided out."""
        return type(self)(*scalar.primitive(self.coords))

    def evaluate(self, values) -> "_Triple":
        return type(self)(*(scalar.evaluate(c, values) for c in self.coords))

    def to_json(self) -> list[str]:
        return [scalar.to_str(c) for c in self.coords]


class Point(_Triple):
    __slots__ = ()

    @property
    def weight(self):
        """Coordinate sum; zero for points at infinity."""
        x, y, z = self.coords
        return x + y + z


class Line(_Triple):
    """The line l*x + m*y + n*z = 0."""

    __slots__ = ()

    def contains(self, p: Point) -> bool:
        return is_zero(self.apply(p))

    def apply(self, p: Point):
        return sum((a * b for a, b in zip(self.coords, p.coords)), 0 * p[0])


def _cross(p, q) -> tuple:
    (a, b, c), (d, e, f) = p, q
    return (b * f - c * e, c * d - a * f, a * e - b * d)


def det3(p, q, r):
    x, y, z = _cross(q, r)
    return p[0] * x + p[1] * y + p[2] * z


def join(p: Point, q: Point) -> Line:
    coords = _cross(p, q)
    if all(is_zero(c) for c in coords):
        raise CoincidentError(f"cannot join coincident points {p} and {q}")
    return Line(*coords)


def meet(r: Line, s: Line) -> Point:
    coords = _cross(r, s)
    if all(is_zero(c) for c in coords):
        raise CoincidentError(f"cannot meet identical lines {r} and {s}")
    return Point(*coords)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return is_zero(det3(p, q, r))


def concurrent(r: Line, s: Line, t: Line) -> bool:
    return is_zero(det3(r, s, t))


@dataclass(frozen=True)
class Triangle:
    """Reference triangle given by squared side lengths.

    ``sa`` is the squared length of BC (opposite A), and cyclically.
    ``check=False`` skips validation, for scratch instances that are about
    to be rejected anyway.
    """

    sa: object
    sb: object
    sc: object
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        for name in ("sa", "sb", "sc"):
            value = getattr(self, name)
            if not scalar.is_symbolic(value):
                object.__setattr__(self, name, scalar.rational(value))
        if self.check:
            self.validate()

    @classmethod
    def symbolic(cls) -> "Triangle":
        return cls(*scalar.symbols(*scalar.SIDE_SYMBOLS))

    @classmethod
    def from_sides(cls, a, b, c) -> "Triangle":
        return cls(*(scalar.rational(s) ** 2 for s in (a, b, c)))

    @property
    def symbolic_realization(self) -> bool:
        return scalar.is_symbolic(self.sa)

    @property
    def squares(self) -> tuple:
        return (self.sa, self.sb, self.sc)

    # b^2 + c^2 - a^2 and cyclic (twice the Conway symbols S_A, S_B, S_C).
    @property
    def ta(self):
        return self.sb + self.sc - self.sa

    @property
    def tb(self):
        return self.sc + self.sa - self.sb

    @property
    def tc(self):
        return self.sa + self.sb - self.sc

    @property
    def area_form(self):
        """16 * area**2."""
        sa, sb, sc = self.squares
        return 2 * (sa * sb + sb * sc + sc * sa) - sa * sa - sb * sb - sc * sc

    def validate(self) -> None:
        if not self.symbolic_realization:
            if any(scalar.sign(s) <= 0 for s in self.squares):
                raise InvalidTriangleError("squared side lengths must be positive")
            if scalar.sign(self.area_form) <= 0:
                raise InvalidTriangleError("side lengths violate the triangle inequality")
        elif is_zero(self.area_form):
            raise InvalidTriangleError("degenerate triangle")
        for name, t in (("A", self.ta), ("B", self.tb), ("C", self.tc)):
            if is_zero(t):
                raise InvalidTriangleError(f"right angle at {name}; orthocentre is a vertex")

    def evaluate(self, values) -> "Triangle":
        return Triangle(*(scalar.evaluate(s, values) for s in self.squares))

    def scaled(self, k) -> "Triangle":
        return Triangle(*(k * s for s in self.squares))

    def vertices(self) -> tuple[Point, Point, Point]:
        one, zero = self.sa ** 0, self.sa * 0
        return (Point(one, zero, zero), Point(zero, one, zero), Point(zero, zero, one))

    def to_json(self) -> dict:
        return {"sa": scalar.to_str(self.sa), "sb": scalar.to_str(self.sb), "sc": scalar.to_str(self.sc)}


def circumcircle_value(t: Triangle, p: Point):
    x, y, z = p
    return t.sa * y * z + t.sb * z * x + t.sc * x * y


def on_circumcircle(t: Triangle, p: Point) -> bool:
    return is_zero(circumcircle_value(t, p))


def polar(t: Triangle, p: Point) -> Line:
    """Polar of ``p`` with respect to the circumcircle (tangent if p is on it)."""
    d, e, f = p
    return Line(t.sb * f + t.sc * e, t.sa * f + t.sc * d, t.sa * e + t.sb * d)


def tangent_at(t: Triangle, p: Point) -> Line:
    if not on_circumcircle(t, p):
        raise NotOnCircleError(f"{p} is not on the circumcircle")
    return polar(t, p)


def second_intersection(t: Triangle, p: Point, q: Point) -> Point:
    """Other point where the line pq meets the circumcircle; ``p`` must be on it.

    On X = s*p + k*q the circle equation is k*(s*polar(p).q + k*G(q)) = 0, so
    dividing out the known root k = 0 leaves (s : k) = (G(q) : -polar(p).q).
    A tangent line gives back p.
    """
    if not on_circumcircle(t, p):
        raise NotOnCircleError(f"{p} is not on the circumcircle")
    if p.equiv(q):
        raise CoincidentError(f"chord through coincident points {p}")
    s = circumcircle_value(t, q)
    k = -polar(t, p).apply(q)
    return Point(*(s * a + k * b for a, b in zip(p, q)))


def chord(t: Triangle, p: Point, q: Point) -> Line:
    """Line through two circumcircle points; the tangent when they coincide.

    The tangent is the limit of the chord as q runs into p along the circle,
    which keeps perspector lines defined when a vertex meets its partner.
    """
    if p.equiv(q):
        if not on_circumcircle(t, p):
            raise CoincidentError(f"cannot join coincident points {p} and {q}")
        return tangent_at(t, p)
    return join(p, q)


@dataclass(frozen=True)
class Circle:
    """A circle of the pencil through the circular points, tied to ``triangle``."""

    triangle: Triangle
    u: object
    v: object
    w: object

    def value(self, p: Point):
        x, y, z = p
        return circumcircle_value(self.triangle, p) + (self.u * x + self.v * y + self.w * z) * (x + y + z)

    def contains(self, p: Point) -> bool:
        return is_zero(self.value(p))

    def same(self, other: "Circle") -> bool:
        return all(is_zero(a - b) for a, b in zip(self.linear, other.linear))

    @property
    def linear(self) -> tuple:
        return (self.u, self.v, self.w)

    def conic(self) -> tuple:
        """Expanded coefficients of (x^2, y^2, z^2, yz, zx, xy)."""
        t, u, v, w = self.triangle, self.u, self.v, self.w
        return (u, v, w, t.sa + v + w, t.sb + w + u, t.sc + u + v)

    def to_json(self) -> list[str]:
        return [scalar.to_str(c) for c in self.linear]


def on_circle(t: Triangle, c: Circle, p: Point) -> bool:
    if c.triangle is not t and c.triangle != t:
        raise GeometryError("circle belongs to a different triangle")
    return c.contains(p)


def circle_through(t: Triangle, p: Point, q: Point, r: Point) -> Circle:
    """Solve for (u, v, w) by Cramer's rule.

    The system determinant is weight(p)*weight(q)*weight(r)*det(p, q, r), so it
    vanishes exactly when the points are collinear or one is at infinity.
    """
    rows, rhs = [], []
    for x in (p, q, r):
        s = x.weight
        rows.append((x[0] * s, x[1] * s, x[2] * s))
        rhs.append(-circumcircle_value(t, x))
    d = det3(*rows)
    if is_zero(d):
        raise SingularSystemError(f"no circle through {p}, {q}, {r}")
    sol = []
    for j in range(3):
        cols = [tuple(rhs[i] if k == j else rows[i][k] for k in range(3)) for i in range(3)]
        sol.append(div(det3(*cols), d))
    return Circle(t, *sol)


def conic_proportional(a: tuple, b: tuple) -> bool:
    """True iff two coefficient vectors agree up to one nonzero factor."""
    if all(is_zero(x) for x in a) or all(is_zero(x) for x in b):
        return False
    return all(is_zero(a[i] * b[j] - a[j] * b[i]) for i in range(len(a)) for j in range(i + 1, len(a)))


def centroid(t: Triangle | None = None) -> Point:
    one = t.sa ** 0 if t is not None else 1
    return Point(one, one, one)


def orthocentre(t: Triangle) -> Point:
    return Point(div(1, t.ta), div(1, t.tb), div(1, t.tc))


def symmedian(t: Triangle) -> Point:
    return Point(t.sa, t.sb, t.sc)


def isotomic(p: Point) -> Point:
    if any(is_zero(c) for c in p):
        raise SidelineError(f"{p} lies on a sideline")
    x, y, z = p
    return Point(y * z, z * x, x * y)


def isogonal(t: Triangle, p: Point) -> Point:
    if any(is_zero(c) for c in p):
        raise SidelineError(f"{p} lies on a sideline")
    x, y, z = p
    return Point(t.sa * y * z, t.sb * z * x, t.sc * x * y)
