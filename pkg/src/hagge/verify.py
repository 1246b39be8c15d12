"""Exact theorem checks over a ConstructionResult.

Every check reduces to "this scalar is exactly zero" for determinants,
circle-equation values, or cross-minors of two triples.  A failing check
keeps the first nonzero residue it met, so a report is enough to reproduce
the failure.  The same ids and meanings apply to rational and symbolic runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import closed_forms, scalar
from .areal import (
    GeometryError,
    Point,
    Triangle,
    centroid,
    chord,
    concurrent,
    conic_proportional,
    det3,
    isogonal,
    isotomic,
    join,
    meet,
    polar,
)
from .construct import (
    HAGGE_CIRCLES,
    PERSPECTIVES,
    SIMSON_LINES,
    VERTEX_CIRCLES,
    Budget,
    ConstructionResult,
    ResourceLimitError,
    StartKind,
    classify,
    run,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

CHECKS = {
    "T1": "DA, EB, FC concurrent at Q",
    "T2": "P1, P2, P3 collinear on the polar of Q",
    "T3": "Hagge circle UVW passes through H",
    "T4": "Hagge circle U'V'W' passes through H",
    "T5": "Hagge circle UV3W2 passes through H",
    "T6": "Hagge circle U3VW1 passes through H",
    "T7": "Hagge circle U2V1W passes through H",
    "T8": "circle BHC contains U, U', U2, U3",
    "T9": "circle CHA contains V, V', V3, V1",
    "T10": "circle AHB contains W, W', W1, W2",
    "T11": "U', V1, W1, H collinear",
    "T12": "V', W2, U2, H collinear",
    "T13": "W', U3, V3, H collinear",
    "T14": "ABC perspective with LMN, L'M'N', LN'M', N'ML', M'L'N at P, Q, P1, P2, P3",
    "T15": "isogonal conjugate of Q is the isotomic conjugate of H",
    "T16": "orthocentre start: U, V, W coincide with H",
    "T17": "symmedian start: L=L', M=M', N=N', Q=K, four Hagge circles, four perspectivities",
    "T18": "AB^DE, BC^EF, CA^FD on the polar of K, which is the line P1P2P3",
}

GENERIC_IDS = [f"T{i}" for i in range(1, 16)]

_DETAIL_LIMIT = 400


class DegenerateTriangleError(GeometryError):
    pass


@dataclass
class CheckRecord:
    id: str
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class CheckReport:
    instance: dict
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def status(self, check_id: str) -> str:
        return self[check_id].status

    def __getitem__(self, check_id: str) -> CheckRecord:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary,
        }


def _fmt(x) -> str:
    s = scalar.to_str(x)
    return s if len(s) <= _DETAIL_LIMIT else s[:_DETAIL_LIMIT] + "..."


class _Residues:
    """Collects the nonzero residues of one check."""

    def __init__(self):
        self.failures: list[str] = []

    def zero(self, label: str, value) -> None:
        if not scalar.is_zero(value):
            self.failures.append(f"{label}: residue {_fmt(value)}")

    def same(self, label: str, p, q) -> None:
        for m in p.minors(q):
            if not scalar.is_zero(m):
                self.failures.append(f"{label}: minor {_fmt(m)}")
                return

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def record(self, check_id: str) -> CheckRecord:
        if self.failures:
            return CheckRecord(check_id, CHECKS[check_id], FAIL, "; ".join(self.failures))
        return CheckRecord(check_id, CHECKS[check_id], PASS)


def _evaluate(check_id: str, fn, res: ConstructionResult) -> CheckRecord:
    r = _Residues()
    try:
        fn(res, r)
    except (GeometryError, ZeroDivisionError) as exc:
        r.fail(f"error: {exc}")
    return r.record(check_id)


def _collinear_all(r: _Residues, label: str, pts: list[Point]) -> None:
    for trio in combinations(range(len(pts)), 3):
        r.zero(f"{label} det{trio}", det3(*(pts[i] for i in trio)))


def _circle_contains(r: _Residues, res: ConstructionResult, circle: str, names) -> None:
    c = res.circles.get(circle)
    if c is None:
        r.fail(f"circle {circle} undefined ({res.flags.get(circle, 'not constructed')})")
        return
    for n in names:
        r.zero(f"{n} on {circle}", c.value(res[n]))


def check_perspective(first, second, t: Triangle | None = None) -> Point | None:
    """Perspector of two triangles matched vertex for vertex, or None.

    With ``t`` given, both triangles are inscribed in its circumcircle and a
    vertex that coincides with its partner contributes the tangent there.
    """
    for tri in (first, second):
        if any(p.equiv(q) for p, q in combinations(tri, 2)):
            raise DegenerateTriangleError(f"repeated vertex in {tri}")
    try:
        lines = [chord(t, p, q) if t is not None else join(p, q) for p, q in zip(first, second)]
    except GeometryError as exc:
        raise DegenerateTriangleError(f"corresponding vertices coincide: {exc}") from exc
    if not concurrent(*lines):
        return None
    for a, b in combinations(lines, 2):
        if not a.equiv(b):
            return meet(a, b)
    raise DegenerateTriangleError("all three joins are the same line")


def _t1(res, r):
    lines = [join(res[x], res[y]) for x, y in (("D", "A"), ("E", "B"), ("F", "C"))]
    r.zero("det(DA, EB, FC)", det3(*lines))
    r.zero("FC through Q", lines[2].apply(res["Q"]))


def _t2(res, r):
    p1, p2, p3 = res["P1"], res["P2"], res["P3"]
    r.zero("det(P1, P2, P3)", det3(p1, p2, p3))
    pq = polar(res.triangle, res["Q"])
    for n in ("P1", "P2", "P3"):
        r.zero(f"{n} on polar(Q)", pq.apply(res[n]))


def _hagge(name):
    def check(res, r):
        _circle_contains(r, res, name, ["H"])
    return check


def _vertex_circle(name):
    def check(res, r):
        _circle_contains(r, res, name, VERTEX_CIRCLES[name][1])
    return check


def _simson(name):
    def check(res, r):
        _collinear_all(r, name, [res[n] for n in SIMSON_LINES[name]] + [res["H"]])
    return check


def _perspectives(res, r, table):
    A, B, C = res["A"], res["B"], res["C"]
    for label, (names, centre) in table.items():
        tri = [res[n] for n in names]
        persp = check_perspective((A, B, C), tri, res.triangle)
        if persp is None:
            joins = [chord(res.triangle, p, q) for p, q in zip((A, B, C), tri)]
            r.zero(f"ABC/{label} joins", det3(*joins))
        elif centre is not None:
            r.same(f"ABC/{label} perspector vs {centre}", persp, res[centre])


def _t14(res, r):
    _perspectives(res, r, PERSPECTIVES)


def _t15(res, r):
    r.same("isogonal(Q) vs isotomic(H)", isogonal(res.triangle, res["Q"]), isotomic(res["H"]))


def _t16(res, r):
    for n in "UVW":
        r.same(f"{n} vs H", res[n], res["H"])
    if res.circles.get("UVW") is not None:
        r.fail("Hagge circle UVW was fitted although its points coincide")


def _t17(res, r):
    for x in ("L", "M", "N"):
        r.same(f"{x} vs {x}'", res[x], res[x + "'"])
    r.same("Q vs K", res["Q"], res["K"])
    circles = [res.circles.get(n) for n in HAGGE_CIRCLES]
    if any(c is None for c in circles):
        r.fail("a Hagge circle is undefined")
    else:
        distinct = []
        for c in circles:
            if not any(c.same(d) for d in distinct):
                distinct.append(c)
        if len(distinct) != 4:
            r.fail(f"{len(distinct)} distinct Hagge circles, expected 4")
        uvw, uvw2 = res.circles["UVW"], res.circles["U'V'W'"]
        for a, b in zip(uvw.linear, uvw2.linear):
            r.zero("UVW vs U'V'W'", a - b)
    table = {
        "LMN": (("L", "M", "N"), "K"),
        "LNM": (("L", "N", "M"), None),
        "NML": (("N", "M", "L"), None),
        "MLN": (("M", "L", "N"), None),
    }
    _perspectives(res, r, table)


def _t18(res, r):
    pk = polar(res.triangle, res["K"])
    for n in ("AB^DE", "BC^EF", "CA^FD"):
        r.zero(f"{n} on polar(K)", pk.apply(res[n]))
    r.zero("det(P1, P2, P3)", det3(res["P1"], res["P2"], res["P3"]))
    r.same("line P1P2P3 vs polar(K)", join(res["P1"], res["P2"]), pk)


_FUNCS = {
    "T1": _t1,
    "T2": _t2,
    "T3": _hagge("UVW"),
    "T4": _hagge("U'V'W'"),
    "T5": _hagge("UV3W2"),
    "T6": _hagge("U3VW1"),
    "T7": _hagge("U2V1W"),
    "T8": _vertex_circle("BHC"),
    "T9": _vertex_circle("CHA"),
    "T10": _vertex_circle("AHB"),
    "T11": _simson("simson(L')"),
    "T12": _simson("simson(M')"),
    "T13": _simson("simson(N')"),
    "T14": _t14,
    "T15": _t15,
    "T16": _t16,
    "T17": _t17,
    "T18": _t18,
}

_SKIP_NOTES = {
    "T16": "applies to the orthocentre start only",
    "T17": "applies to the symmedian start only",
    "T18": "applies to the symmedian start only",
}


def _report(res: ConstructionResult, ids: list[str], skip_note) -> CheckReport:
    report = CheckReport(res.describe())
    for check_id in CHECKS:
        if check_id in ids:
            report.checks.append(_evaluate(check_id, _FUNCS[check_id], res))
        else:
            report.checks.append(CheckRecord(check_id, CHECKS[check_id], SKIPPED, skip_note(check_id)))
    return report


def check_all(res: ConstructionResult) -> CheckReport:
    """T1-T15 on a generic or centroid run; T16-T18 are skipped."""
    return _report(res, GENERIC_IDS, lambda i: _SKIP_NOTES[i])


def check_degenerate(res: ConstructionResult) -> CheckReport:
    """T16 for the orthocentre start, T17 and T18 for the symmedian start."""
    if res.start.kind is StartKind.ORTHOCENTRE:
        ids = ["T16"]
    elif res.start.kind is StartKind.SYMMEDIAN:
        ids = ["T17", "T18"]
    else:
        raise ValueError(f"not a degenerate run: {res.start.kind.value}")
    return _report(res, ids, lambda i: _SKIP_NOTES.get(i, "belongs to the generic construction"))


def skipped_report(instance: dict, note: str) -> CheckReport:
    return CheckReport(instance, [CheckRecord(i, n, SKIPPED, note) for i, n in CHECKS.items()])


def check_generic(max_terms: int = 50_000, seconds: float = 60.0) -> CheckReport:
    """T1-T15 with both the triangle and P = (l, m, n) left symbolic.

    Runs under a monomial and wall-clock budget; if either is exceeded the
    whole report is skipped rather than partially trusted.
    """
    sa, sb, sc, l, m, n = scalar.symbols(*scalar.SIDE_SYMBOLS, *scalar.POINT_SYMBOLS)
    t = Triangle(sa, sb, sc)
    start = classify(t, Point(l, m, n))
    instance = {**t.to_json(), "point": ["l", "m", "n"], "kind": start.kind.value, "realization": "symbolic"}
    try:
        res = run(t, start, Budget(max_terms=max_terms, seconds=seconds))
    except ResourceLimitError as exc:
        return skipped_report(instance, f"skipped: resource limit ({exc})")
    return check_all(res)


def _reproduction_record(check_id, name, ok, detail="") -> CheckRecord:
    return CheckRecord(check_id, name, PASS if ok else FAIL, "" if ok else detail)


def check_equation_reproduction(t: Triangle | None = None) -> CheckReport:
    """Compare the centroid run with hand-written closed forms.

    Points must agree projectively and circles must agree with the expanded
    conic up to one overall nonzero factor.
    """
    t = t if t is not None else Triangle.symbolic()
    res = run(t, classify(t, centroid(t)))
    report = CheckReport({**res.describe(), "reference": "closed forms for the centroid start"})
    for name, expected in closed_forms.points(t).items():
        got = res[name]
        bad = next((m for m in got.minors(expected) if not scalar.is_zero(m)), None)
        report.checks.append(
            _reproduction_record(f"point {name}", f"{name} matches its closed form", bad is None,
                                 f"minor {_fmt(bad)}" if bad is not None else "")
        )
    pq = closed_forms.polar_of_q(t)
    report.checks.append(
        _reproduction_record("line polar(Q)", "polar of Q matches its closed form",
                             conic_proportional(res.lines["polar(Q)"].coords, pq), str(res.lines["polar(Q)"]))
    )
    for name, form in closed_forms.CONICS.items():
        fitted = res.circles[name].conic()
        report.checks.append(
            _reproduction_record(f"circle {name}", f"circle {name} is proportional to its closed form",
                                 conic_proportional(fitted, form(t)),
                                 ", ".join(_fmt(c) for c in fitted))
        )
    return report


def check_specialization(symbolic: ConstructionResult, count: int = 25, seed: int = 0,
                         max_coord: int = 60) -> list[str]:
    """Evaluate a symbolic centroid run at random rational triangles.

    Each specialization is compared, point by point, with a fresh rational
    run on the same triangle.  Returns a list of mismatch descriptions.
    """
    rng = random.Random(seed)
    problems: list[str] = []
    done = 0
    while done < count:
        values = {s: Fraction(rng.randint(1, max_coord), rng.randint(1, 5)) for s in scalar.SIDE_SYMBOLS}
        try:
            t = Triangle(*(values[s] for s in scalar.SIDE_SYMBOLS))
            if t.sa == t.sb == t.sc:
                continue
            numeric = run(t, classify(t, centroid(t)))
            specialized = {n: p.evaluate(values) for n, p in symbolic.points.items()}
        except (GeometryError, ZeroDivisionError):
            continue
        for name, p in specialized.items():
            if not p.equiv(numeric[name]):
                problems.append(f"{name} at {values}")
        done += 1
    return problems
