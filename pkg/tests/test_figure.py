import math
import xml.etree.ElementTree as ET

import pytest

from hagge.areal import Point, Triangle
from hagge.cli import construct_instance
from hagge.figure import (
    CartesianEmbedding,
    PointAtInfinityError,
    RenderOptions,
    areal_to_cartesian,
    embedded_points,
    max_residual,
    render,
)

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def worked():
    t = Triangle(4, 5, 6)
    res = construct_instance(t, "g")
    return res, CartesianEmbedding.from_triangle(t)


def test_embedding_side_lengths():
    for sides in [(4, 5, 6), (169, 196, 225), (2, 3, 4)]:
        emb = CartesianEmbedding.from_triangle(Triangle(*sides))
        for got, sq in zip(emb.side_lengths(), sides):
            assert abs(got - math.sqrt(sq)) <= 1e-9 * math.sqrt(sq)
        assert emb.B == (0.0, 0.0) and emb.C[1] == 0.0 and emb.A[1] > 0


def test_vertex_and_centroid(worked):
    _, emb = worked
    assert areal_to_cartesian(emb, Point(1, 0, 0)) == pytest.approx(emb.A)
    g = areal_to_cartesian(emb, Point(1, 1, 1))
    assert g == pytest.approx(tuple(sum(v[k] for v in (emb.A, emb.B, emb.C)) / 3 for k in range(2)))


def test_orthocentre_matches_altitudes(worked):
    _, emb = worked
    (ax, ay), (bx, by), (cx, cy) = emb.A, emb.B, emb.C
    # altitude from A is vertical (BC on the x-axis); altitude from B is perpendicular to CA
    hx = ax
    dx, dy = ax - cx, ay - cy
    hy = by - (hx - bx) * dx / dy
    got = areal_to_cartesian(emb, Point(15, 21, 35))
    assert math.dist(got, (hx, hy)) < 1e-9


def test_point_at_infinity(worked):
    _, emb = worked
    with pytest.raises(PointAtInfinityError):
        areal_to_cartesian(emb, Point(1, -1, 0))


def test_render_counts_and_xml(worked):
    res, emb = worked
    svg = render(res, emb)
    root = ET.fromstring(svg.encode())
    assert root.tag == SVG + "svg"
    assert len(root.findall(SVG + "circle")) == 9
    assert len(root.findall(SVG + "line")) == 1
    labels = {t.text for t in root.findall(SVG + "text")}
    assert len(labels) >= 22
    assert {"A", "H", "G", "P1", "U'", "V1"} <= labels


def test_labels_off(worked):
    res, emb = worked
    svg = render(res, emb, RenderOptions(size=400, labels=False))
    assert "<text" not in svg and 'width="400"' in svg


def test_render_residuals(worked):
    res, emb = worked
    assert max_residual(res, emb) < 1e-6


def test_render_deterministic(worked):
    res, emb = worked
    assert render(res, emb) == render(res, emb)


def _rotate(p, centre, angle):
    s, c = math.sin(angle), math.cos(angle)
    x, y = p[0] - centre[0], p[1] - centre[1]
    return (centre[0] + c * x - s * y, centre[1] + s * x + c * y)


def test_equilateral_rotation_symmetry():
    t = Triangle(1, 1, 1)
    res = construct_instance(t, "g")
    emb = CartesianEmbedding.from_triangle(t)
    pts = list(embedded_points(res, emb).values())
    centre = areal_to_cartesian(emb, Point(1, 1, 1))
    for angle in (2 * math.pi / 3, 4 * math.pi / 3):
        for p in pts:
            q = _rotate(p, centre, angle)
            assert min(math.dist(q, r) for r in pts) < 1e-6


def test_rotation_permutes_cyclic_starts():
    """Equilateral, generic P: rotating the drawing of P gives the drawing of its cyclic shift."""
    t = Triangle(1, 1, 1)
    emb = CartesianEmbedding.from_triangle(t)
    one = embedded_points(construct_instance(t, "3,2,1"), emb)
    two = embedded_points(construct_instance(t, "1,3,2"), emb)
    centre = areal_to_cartesian(emb, Point(1, 1, 1))
    # vertex A is carried to B by the rotation that maps one start to the other
    angle = math.atan2(emb.B[1] - centre[1], emb.B[0] - centre[0]) - math.atan2(emb.A[1] - centre[1], emb.A[0] - centre[0])
    assert math.dist(_rotate(one["P"], centre, angle), two["P"]) < 1e-6
    targets = list(two.values())
    for p in one.values():
        assert min(math.dist(_rotate(p, centre, angle), r) for r in targets) < 1e-6
