"""SVG drawing of the construction.

This is the only module that touches floating point.  Exact points are
converted on the way out and nothing computed here is fed back into the
exact core; the on-circle residuals it reports are a rendering sanity check,
not evidence for any theorem.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .areal import GeometryError, Line, Point, join, meet
from .construct import HAGGE_CIRCLES, VERTEX_CIRCLES, ConstructionResult

log = logging.getLogger(__name__)

LABELLED = [
    "A", "B", "C", "P", "H", "L", "M", "N", "D", "E", "F", "Q", "L'", "M'", "N'",
    "P1", "P2", "P3", "U", "V", "W", "U'", "V'", "W'", "U2", "U3", "V3", "V1", "W1", "W2",
]

STYLES = [
    ("#1f77b4", ""), ("#d62728", ""), ("#2ca02c", ""), ("#9467bd", ""),
    ("#ff7f0e", ""), ("#8c564b", ""), ("#e377c2", "6,3"), ("#17becf", "6,3"),
    ("#7f7f7f", "6,3"), ("#bcbd22", "2,3"), ("#393b79", "2,3"), ("#637939", "8,2,2,2"),
]


class PointAtInfinityError(GeometryError):
    pass


@dataclass(frozen=True)
class CartesianEmbedding:
    """B at the origin, C on the positive x-axis, A above it."""

    A: tuple[float, float]
    B: tuple[float, float]
    C: tuple[float, float]

    @classmethod
    def from_triangle(cls, t) -> "CartesianEmbedding":
        sa, sb, sc = (float(s) for s in t.squares)
        a = math.sqrt(sa)
        x = (sa + sc - sb) / (2 * a)
        return cls((x, math.sqrt(max(sc - x * x, 0.0))), (0.0, 0.0), (a, 0.0))

    def side_lengths(self) -> tuple[float, float, float]:
        return (math.dist(self.B, self.C), math.dist(self.C, self.A), math.dist(self.A, self.B))


def areal_to_cartesian(emb: CartesianEmbedding, p: Point) -> tuple[float, float]:
    x, y, z = (float(c) for c in p)
    s = x + y + z
    if s == 0:
        raise PointAtInfinityError(f"{p} is at infinity")
    return (
        (x * emb.A[0] + y * emb.B[0] + z * emb.C[0]) / s,
        (x * emb.A[1] + y * emb.B[1] + z * emb.C[1]) / s,
    )


def circumcentre(p, q, r) -> tuple[tuple[float, float], float] | None:
    (ax, ay), (bx, by), (cx, cy) = p, q, r
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    scale = max(abs(v) for v in (ax, ay, bx, by, cx, cy)) or 1.0
    if abs(d) < 1e-12 * scale * scale:
        return None
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return (ux, uy), math.dist((ux, uy), p)


@dataclass
class DrawnCircle:
    name: str
    defining: tuple[str, str, str]
    members: tuple[str, ...]
    centre: tuple[float, float] | None
    radius: float | None

    def residuals(self, pts: dict) -> dict[str, float]:
        if self.centre is None:
            return {}
        return {
            n: abs(math.dist(self.centre, pts[n]) - self.radius) / self.radius
            for n in self.members if n in pts
        }


def circle_table(res: ConstructionResult) -> list[tuple[str, tuple, tuple]]:
    """(name, defining points, all points that should lie on it)."""
    table = [("circumcircle", ("A", "B", "C"), ("A", "B", "C", "L", "M", "N", "L'", "M'", "N'"))]
    for name, (names, _) in HAGGE_CIRCLES.items():
        if res.circles.get(name) is not None:
            table.append((name, names, names + ("H",)))
    for name, (names, members) in VERTEX_CIRCLES.items():
        table.append((name, names, names + members))
    return table


def embedded_points(res: ConstructionResult, emb: CartesianEmbedding) -> dict[str, tuple[float, float]]:
    out = {}
    for name, p in res.points.items():
        try:
            out[name] = areal_to_cartesian(emb, p)
        except PointAtInfinityError:
            log.debug("%s is at infinity; not drawn", name)
    return out


def drawn_circles(res: ConstructionResult, emb: CartesianEmbedding) -> list[DrawnCircle]:
    pts = embedded_points(res, emb)
    circles = []
    for name, defining, members in circle_table(res):
        fit = circumcentre(*(pts[n] for n in defining))
        centre, radius = fit if fit else (None, None)
        circles.append(DrawnCircle(name, defining, members, centre, radius))
    return circles


def max_residual(res: ConstructionResult, emb: CartesianEmbedding) -> float:
    pts = embedded_points(res, emb)
    worst = 0.0
    for c in drawn_circles(res, emb):
        worst = max([worst, *c.residuals(pts).values()])
    return worst


def _finite_points_on(line: Line, res: ConstructionResult, emb) -> list[tuple[float, float]]:
    found = []
    A, B, C = res["A"], res["B"], res["C"]
    for side in (join(B, C), join(C, A), join(A, B)):
        try:
            found.append(areal_to_cartesian(emb, meet(line, side)))
        except GeometryError:
            continue
    return found


@dataclass
class RenderOptions:
    size: int = 800
    labels: bool = True


class _Canvas:
    def __init__(self, emb: CartesianEmbedding, size: int):
        xs = [emb.A[0], emb.B[0], emb.C[0]]
        ys = [emb.A[1], emb.B[1], emb.C[1]]
        width, height = max(xs) - min(xs), max(ys) - min(ys)
        self.size = size
        self.scale = min(0.7 * size / height, 0.9 * size / width)
        self.cx = (max(xs) + min(xs)) / 2
        self.cy = (max(ys) + min(ys)) / 2

    def __call__(self, p):
        return (self.size / 2 + (p[0] - self.cx) * self.scale, self.size / 2 - (p[1] - self.cy) * self.scale)


def _line_across(p, q, size):
    """Extend segment pq far beyond the canvas; the viewport clips it."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    norm = math.hypot(dx, dy)
    if norm == 0:
        return None
    k = 4 * size / norm
    return (p[0] - k * dx, p[1] - k * dy, p[0] + k * dx, p[1] + k * dy)


def render(res: ConstructionResult, emb: CartesianEmbedding | None = None,
           options: RenderOptions | None = None) -> str:
    emb = emb or CartesianEmbedding.from_triangle(res.triangle)
    options = options or RenderOptions()
    size = options.size
    cv = _Canvas(emb, size)
    pts = embedded_points(res, emb)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]

    def poly(names, stroke, dash=""):
        if not all(n in pts for n in names):
            out.append(f"<!-- {escape(''.join(names))} has a vertex at infinity -->")
            return
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in (cv(pts[n]) for n in names))
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<polygon points="{coords}" fill="none" stroke="{stroke}" stroke-width="1.5"{extra}/>')

    poly(("A", "B", "C"), "black")
    poly(("D", "E", "F"), "#555555", "4,4")

    for i, c in enumerate(drawn_circles(res, emb)):
        colour, dash = STYLES[i % len(STYLES)]
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        if c.centre is None:
            log.warning("circle %s is degenerate in the embedding; drawn as a line", c.name)
            seg = _line_across(cv(pts[c.defining[0]]), cv(pts[c.defining[1]]), size)
            if seg:
                out.append(f"<!-- warning: circle {escape(c.name)} degenerate, drawn as a line -->")
                out.append(f'<line x1="{seg[0]:.3f}" y1="{seg[1]:.3f}" x2="{seg[2]:.3f}" y2="{seg[3]:.3f}" '
                           f'stroke="{colour}"{extra}/>')
            continue
        x, y = cv(c.centre)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{c.radius * cv.scale:.3f}" fill="none" '
                   f'stroke="{colour}" stroke-width="1.2"{extra}><title>{escape(c.name)}</title></circle>')

    if all(n in res.points for n in ("P1", "P2")):
        try:
            ends = _finite_points_on(join(res["P1"], res["P2"]), res, emb)
        except GeometryError:
            ends = []
        if len(ends) >= 2:
            seg = _line_across(cv(ends[0]), cv(ends[-1]), size)
            if seg:
                out.append(f'<line x1="{seg[0]:.3f}" y1="{seg[1]:.3f}" x2="{seg[2]:.3f}" y2="{seg[3]:.3f}" '
                           f'stroke="#444444" stroke-width="1"><title>P1P2P3</title></line>')

    for name in LABELLED:
        if name not in pts:
            continue
        x, y = cv(pts[name])
        out.append(f'<rect x="{x - 2:.3f}" y="{y - 2:.3f}" width="4" height="4" fill="black"/>')
        if options.labels:
            label = "G" if name == "P" and res.start.kind.value == "centroid" else name
            out.append(f'<text x="{x + 4:.3f}" y="{y - 4:.3f}" font-family="sans-serif" '
                       f'font-size="11">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
