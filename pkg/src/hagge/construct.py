"""The Hagge-circle construction, driven by a starting point P.

From P the cevians AP, BP, CP meet the circumcircle again at L, M, N.  The
tangents there bound the triangle DEF; DA, EB, FC meet at Q and meet the
circumcircle again at L', M', N'.  The perspectors P1, P2, P3, the
reflections of L, M, N, L', M', N' in the sidelines, the five Hagge circles,
and the circles BHC, CHA, AHB all follow.

Nothing is assumed that the verifier checks: Q is the meet of DA and EB
only, each perspector is the meet of two of its three lines, and Hagge
circles are fitted through their three reflection points without reference
to H.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from . import scalar
from .areal import (
    Circle,
    GeometryError,
    Line,
    Point,
    Triangle,
    centroid,
    chord,
    circle_through,
    join,
    meet,
    orthocentre,
    polar,
    second_intersection,
    symmedian,
    tangent_at,
)
from .reflect import reflect_ab, reflect_bc, reflect_ca


class StartKind(str, Enum):
    INTERIOR = "generic-interior"
    CENTROID = "centroid"
    ORTHOCENTRE = "orthocentre-degenerate"
    SYMMEDIAN = "symmedian-degenerate"
    EXTERIOR = "exterior"


class ClassificationError(GeometryError):
    """The starting point needs a different pipeline, or none at all."""


class ResourceLimitError(RuntimeError):
    pass


# Hagge circle name -> (defining reflections, perspector of ABC with the
# triangle whose reflections they are).
HAGGE_CIRCLES = {
    "UVW": (("U", "V", "W"), "P"),
    "U'V'W'": (("U'", "V'", "W'"), "Q"),
    "UV3W2": (("U", "V3", "W2"), "P1"),
    "U3VW1": (("U3", "V", "W1"), "P2"),
    "U2V1W": (("U2", "V1", "W"), "P3"),
}

# Circle through two vertices and H -> the reflections it should carry.
VERTEX_CIRCLES = {
    "BHC": (("B", "H", "C"), ("U", "U'", "U2", "U3")),
    "CHA": (("C", "H", "A"), ("V", "V'", "V3", "V1")),
    "AHB": (("A", "H", "B"), ("W", "W'", "W1", "W2")),
}

# Double-Simson lines: the three reflections of one circumcircle point.
SIMSON_LINES = {
    "simson(L')": ("U'", "V1", "W1"),
    "simson(M')": ("V'", "W2", "U2"),
    "simson(N')": ("W'", "U3", "V3"),
}

# Triangles in perspective with ABC, listed vertex-for-vertex with A, B, C.
PERSPECTIVES = {
    "LMN": (("L", "M", "N"), "P"),
    "L'M'N'": (("L'", "M'", "N'"), "Q"),
    "LN'M'": (("L", "N'", "M'"), "P1"),
    "N'ML'": (("N'", "M", "L'"), "P2"),
    "M'L'N": (("M'", "L'", "N"), "P3"),
}


@dataclass(frozen=True)
class StartingPoint:
    point: Point
    kind: StartKind


def classify(t: Triangle, p: Point, allow_exterior: bool = False) -> StartingPoint:
    """Sort P into the pipeline that can handle it.

    For rational instances P must be strictly inside ABC unless
    ``allow_exterior``; a point on a sideline is always refused.
    """
    if any(scalar.is_zero(c) for c in p):
        raise ClassificationError(f"{p} lies on a sideline")
    if p.equiv(orthocentre(t)):
        return StartingPoint(p, StartKind.ORTHOCENTRE)
    if p.equiv(symmedian(t)):
        return StartingPoint(p, StartKind.SYMMEDIAN)
    if p.equiv(centroid(t)):
        return StartingPoint(p, StartKind.CENTROID)
    if not any(scalar.is_symbolic(c) for c in p):
        signs = {scalar.sign(c) for c in p}
        if len(signs) > 1:
            if not allow_exterior:
                raise ClassificationError(f"{p} is outside the triangle")
            return StartingPoint(p, StartKind.EXTERIOR)
    return StartingPoint(p, StartKind.INTERIOR)


class Budget:
    """Caps on coefficient growth and wall time for large symbolic runs."""

    def __init__(self, max_terms: int | None = None, seconds: float | None = None):
        self.max_terms = max_terms
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def charge(self, name: str, obj) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError(f"time budget exhausted at {name}")
        if self.max_terms is None:
            return
        coords = obj.linear if isinstance(obj, Circle) else obj.coords
        biggest = max(scalar.size(c) for c in coords)
        if biggest > self.max_terms:
            raise ResourceLimitError(f"{name} has {biggest} monomials (limit {self.max_terms})")


@dataclass
class ConstructionResult:
    triangle: Triangle
    start: StartingPoint
    points: dict[str, Point] = field(default_factory=dict)
    lines: dict[str, Line] = field(default_factory=dict)
    circles: dict[str, Circle | None] = field(default_factory=dict)
    flags: dict[str, str] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Point:
        return self.points[name]

    @property
    def realization(self) -> str:
        symbolic = self.triangle.symbolic_realization or any(scalar.is_symbolic(c) for c in self.start.point)
        return "symbolic" if symbolic else "rational"

    def describe(self) -> dict:
        return {
            **self.triangle.to_json(),
            "point": self.start.point.to_json(),
            "kind": self.start.kind.value,
            "realization": self.realization,
        }


class _Builder:
    def __init__(self, t: Triangle, start: StartingPoint, budget: Budget | None):
        self.res = ConstructionResult(t, start)
        self.budget = budget

    def point(self, name, p):
        p = p.primitive()
        if self.budget:
            self.budget.charge(name, p)
        self.res.points[name] = p
        return p

    def line(self, name, l):
        l = l.primitive()
        if self.budget:
            self.budget.charge(name, l)
        self.res.lines[name] = l
        return l

    def circle(self, name, names):
        pts = [self.res.points[n] for n in names]
        try:
            c = circle_through(self.res.triangle, *pts)
        except GeometryError as exc:
            self.res.circles[name] = None
            self.res.flags[name] = f"undefined: {exc}"
            return None
        if self.budget:
            self.budget.charge(name, c)
        self.res.circles[name] = c
        return c


def _pipeline(t: Triangle, start: StartingPoint, budget: Budget | None) -> _Builder:
    b = _Builder(t, start, budget)
    A, B, C = (b.point(n, v) for n, v in zip("ABC", t.vertices()))
    P = b.point("P", start.point)
    b.point("G", centroid(t))
    b.point("K", symmedian(t))
    b.point("H", orthocentre(t))

    L = b.point("L", second_intersection(t, A, P))
    M = b.point("M", second_intersection(t, B, P))
    N = b.point("N", second_intersection(t, C, P))

    tl, tm, tn = (b.line(f"tangent({n})", tangent_at(t, x)) for n, x in (("L", L), ("M", M), ("N", N)))
    try:
        D = b.point("D", meet(tm, tn))
        E = b.point("E", meet(tn, tl))
        F = b.point("F", meet(tl, tm))
    except GeometryError as exc:
        raise GeometryError(f"tangent triangle is degenerate: {exc}") from exc

    da, eb = b.line("DA", join(D, A)), b.line("EB", join(E, B))
    b.line("FC", join(F, C))
    Q = b.point("Q", meet(da, eb))
    for name, v in zip("ABC", (A, B, C)):
        if Q.equiv(v):
            b.res.flags["Q"] = f"Q coincides with vertex {name}; L'M'N' is degenerate"
    b.line("polar(Q)", polar(t, Q))

    L2 = b.point("L'", second_intersection(t, A, D))
    M2 = b.point("M'", second_intersection(t, B, E))
    N2 = b.point("N'", second_intersection(t, C, F))

    b.point("P1", meet(chord(t, A, L), chord(t, B, N2)))
    b.point("P2", meet(chord(t, B, M), chord(t, C, L2)))
    b.point("P3", meet(chord(t, C, N), chord(t, A, M2)))

    for name, fn, src in (
        ("U", reflect_bc, L), ("V", reflect_ca, M), ("W", reflect_ab, N),
        ("U'", reflect_bc, L2), ("V'", reflect_ca, M2), ("W'", reflect_ab, N2),
        ("U2", reflect_bc, M2), ("U3", reflect_bc, N2),
        ("V3", reflect_ca, N2), ("V1", reflect_ca, L2),
        ("W1", reflect_ab, L2), ("W2", reflect_ab, M2),
    ):
        b.point(name, fn(t, src))

    for name, (names, _) in VERTEX_CIRCLES.items():
        b.circle(name, names)
    for name, names in SIMSON_LINES.items():
        pts = [b.res.points[n] for n in names]
        try:
            b.line(name, join(pts[0], pts[1]) if not pts[0].equiv(pts[1]) else join(pts[0], pts[2]))
        except GeometryError as exc:
            b.res.flags[name] = f"undefined: {exc}"
    b.res.circles["circumcircle"] = Circle(t, 0 * t.sa, 0 * t.sa, 0 * t.sa)
    return b


def run(t: Triangle, start: StartingPoint, budget: Budget | None = None) -> ConstructionResult:
    """Full construction for a centroid or generic starting point."""
    if start.kind in (StartKind.ORTHOCENTRE, StartKind.SYMMEDIAN):
        raise ClassificationError(f"starting point is {start.kind.value}; use the dedicated run")
    b = _pipeline(t, start, budget)
    for name, (names, _) in HAGGE_CIRCLES.items():
        b.circle(name, names)
    return b.res


def run_degenerate_h(t: Triangle) -> ConstructionResult:
    """P = H.  U, V, W all collapse onto H.

    The Hagge circle UVW is then a single point, and the three circles using
    one of U, V, W are no longer determined by their Hagge definition; they
    are recorded as None and flagged.  The circles through H and the other
    two points are kept under names with H substituted.
    """
    start = StartingPoint(orthocentre(t), StartKind.ORTHOCENTRE)
    b = _pipeline(t, start, None)
    res = b.res
    H = res.points["H"]
    for name, (names, _) in HAGGE_CIRCLES.items():
        collapsed = [n for n in names if res.points[n].equiv(H)]
        if len(collapsed) == 3:
            res.circles[name] = None
            res.flags[name] = "degenerate: all three defining points coincide with H"
        elif collapsed:
            res.circles[name] = None
            res.flags[name] = f"ill-defined: {', '.join(collapsed)} coincides with H"
            substituted = tuple("H" if n in collapsed else n for n in names)
            b.circle("".join(substituted), substituted)
        else:
            b.circle(name, names)
    if res.points["P"].equiv(res.points["G"]):
        res.flags["P"] = "orthocentre coincides with the centroid (equilateral triangle)"
    return res


def run_degenerate_k(t: Triangle) -> ConstructionResult:
    """P = K.  D, A, L are collinear so L' = L (and cyclically), and Q = K."""
    start = StartingPoint(symmedian(t), StartKind.SYMMEDIAN)
    b = _pipeline(t, start, None)
    res = b.res
    for name, (names, _) in HAGGE_CIRCLES.items():
        b.circle(name, names)
    A, B, C, D, E, F = (res.points[n] for n in "ABCDEF")
    b.point("AB^DE", meet(join(A, B), join(D, E)))
    b.point("BC^EF", meet(join(B, C), join(E, F)))
    b.point("CA^FD", meet(join(C, A), join(F, D)))
    b.line("polar(K)", polar(t, res.points["K"]))
    b.line("P1P2P3", join(res.points["P1"], res.points["P2"]))
    if res.circles["UVW"] is not None and res.circles["U'V'W'"] is not None:
        if res.circles["UVW"].same(res.circles["U'V'W'"]):
            res.flags["U'V'W'"] = "coincides with UVW"
    return res
