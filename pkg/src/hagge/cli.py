"""Command-line driver.

Machine output is JSON on stdout and nothing else; ``--verbose`` adds a
human summary on stderr.  Exit status: 0 when no check fails, 1 when one
does, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import scalar
from .areal import GeometryError, InvalidTriangleError, Point, Triangle, centroid
from .construct import (
    ConstructionResult,
    StartKind,
    classify,
    run,
    run_degenerate_h,
    run_degenerate_k,
)
from .figure import CartesianEmbedding, RenderOptions, max_residual, render
from .verify import (
    FAIL,
    GENERIC_IDS,
    PASS,
    CheckReport,
    check_all,
    check_degenerate,
    check_equation_reproduction,
    check_generic,
    skipped_report,
)

MAX_ATTEMPTS = 10_000


class InputError(ValueError):
    pass


def _triple(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"expected three comma-separated values, got {text!r}")
    try:
        return tuple(scalar.rational(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational triple: {text!r}") from exc


def parse_triangle(args) -> Triangle:
    if getattr(args, "sides", None):
        return Triangle.from_sides(*_triple(args.sides))
    return Triangle(*_triple(args.triangle))


def construct_instance(t: Triangle, text: str, allow_exterior: bool = False) -> ConstructionResult:
    """Build the construction for ``--point`` (``x,y,z`` or g, h, k).

    Explicit coordinates equal to H or K go to the dedicated runs.
    """
    named = text.strip().lower()
    if named == "h":
        return run_degenerate_h(t)
    if named == "k":
        return run_degenerate_k(t)
    p = centroid(t) if named == "g" else Point(*_triple(text))
    start = classify(t, p, allow_exterior)
    if start.kind is StartKind.ORTHOCENTRE:
        return run_degenerate_h(t)
    if start.kind is StartKind.SYMMEDIAN:
        return run_degenerate_k(t)
    return run(t, start)


def report_for(res: ConstructionResult) -> CheckReport:
    if res.start.kind in (StartKind.ORTHOCENTRE, StartKind.SYMMEDIAN):
        return check_degenerate(res)
    return check_all(res)


def _emit(obj, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, indent=2) + "\n")


def _say(args, message: str) -> None:
    if getattr(args, "verbose", False):
        print(message, file=sys.stderr)


def _summarize(args, report: CheckReport) -> None:
    if not getattr(args, "verbose", False):
        return
    for c in report.checks:
        line = f"{c.id:>4} {c.status:<7} {c.name}"
        if c.status == FAIL:
            line += f"  [{c.detail[:160]}]"
        print(line, file=sys.stderr)
    print(f"summary: {report.summary}", file=sys.stderr)


def _degenerate(t: Triangle, case: str) -> CheckReport:
    res = run_degenerate_h(t) if case == "h" else run_degenerate_k(t)
    return check_degenerate(res)


def _generic_worker(max_terms, seconds):
    return check_generic(max_terms=max_terms, seconds=seconds)


def run_generic_bounded(max_terms: int, seconds: float) -> CheckReport:
    """The six-indeterminate run in a child process that is killed at the deadline."""
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(1) as pool:
        pending = pool.apply_async(_generic_worker, (max_terms, seconds))
        try:
            return pending.get(timeout=seconds + 5)
        except multiprocessing.TimeoutError:
            pool.terminate()
    instance = {"sa": "sa", "sb": "sb", "sc": "sc", "point": ["l", "m", "n"],
                "kind": StartKind.INTERIOR.value, "realization": "symbolic"}
    return skipped_report(instance, f"skipped: resource limit (no result within {seconds} s)")


def cmd_verify(args) -> int:
    if args.generic:
        report = run_generic_bounded(args.max_terms, args.seconds)
        _emit(report.to_json())
        _summarize(args, report)
        return 0 if report.ok else 1
    if args.symbolic:
        t = Triangle.symbolic()
        report = check_all(run(t, classify(t, centroid(t))))
        reproduction = check_equation_reproduction(t)
        _emit({**report.to_json(), "reproduction": reproduction.to_json()})
        _summarize(args, report)
        _summarize(args, reproduction)
        return 0 if report.ok and reproduction.ok else 1
    t = parse_triangle(args)
    report = report_for(construct_instance(t, args.point, args.allow_exterior))
    _emit(report.to_json())
    _summarize(args, report)
    return 0 if report.ok else 1


def sample_instances(count: int, seed: int, max_coord: int):
    """Random valid triangles with random starting points, by rejection.

    Orthocentre and symmedian starts are rejected.  Yields (index, Triangle,
    Point); deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    for index in range(count):
        for _ in range(MAX_ATTEMPTS):
            sides = [rng.randint(1, max_coord) for _ in range(3)]
            coords = [rng.randint(1, max_coord) for _ in range(3)]
            try:
                t = Triangle(*sides)
            except InvalidTriangleError:
                continue
            p = Point(*coords)
            if classify(t, p).kind in (StartKind.ORTHOCENTRE, StartKind.SYMMEDIAN):
                continue
            yield index, t, p
            break
        else:
            raise InputError(f"no valid instance after {MAX_ATTEMPTS} attempts (max-coord {max_coord})")


def fuzz_instance(job) -> dict:
    index, t, p = job
    started = time.perf_counter()
    record = {"index": index, **t.to_json(), "point": p.to_json()}
    try:
        res = run(t, classify(t, p))
        report = check_all(res)
    except GeometryError as exc:
        record.update(status=FAIL, failed=list(GENERIC_IDS), detail=f"construction failed: {exc}")
    else:
        failed = [c.id for c in report.checks if c.status == FAIL]
        record.update(status=FAIL if failed else PASS, failed=failed)
        if failed:
            record["detail"] = {c.id: c.detail for c in report.checks if c.status == FAIL}
        if "Q" in res.flags:
            record["degenerate"] = res.flags["Q"]
    record["_seconds"] = time.perf_counter() - started
    return record


def fuzz(count: int, seed: int, max_coord: int, jobs: int = 1) -> tuple[dict, list[float]]:
    """Run the checklist on sampled instances.

    Returns the JSON report and, separately, per-instance wall times (kept
    out of the report so that it is byte-identical across runs).
    """
    instances = list(sample_instances(count, seed, max_coord))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(fuzz_instance, instances, chunksize=8))
    else:
        records = [fuzz_instance(job) for job in instances]
    per_check = {i: {PASS: 0, FAIL: 0} for i in GENERIC_IDS}
    for r in records:
        for i in GENERIC_IDS:
            per_check[i][FAIL if i in r["failed"] else PASS] += 1
    timings = [r.pop("_seconds") for r in records]
    passed = sum(r["status"] == PASS for r in records)
    report = {
        "seed": seed,
        "count": count,
        "max_coord": max_coord,
        "instances": records,
        "summary": {"pass": passed, "fail": count - passed, "per_check": per_check},
    }
    return report, timings


def cmd_fuzz(args) -> int:
    if args.count < 1:
        print("fuzz: --count must be at least 1", file=sys.stderr)
        return 2
    result, timings = fuzz(args.count, args.seed, args.max_coord, args.jobs)
    _emit(result)
    _say(args, f"{result['summary']['pass']}/{args.count} instances pass; "
               f"total {sum(timings):.2f} s, slowest {max(timings) * 1000:.1f} ms")
    if args.verbose:
        for i, counts in result["summary"]["per_check"].items():
            print(f"{i:>4} pass {counts[PASS]:>5} fail {counts[FAIL]:>5}", file=sys.stderr)
    return 0 if result["summary"]["fail"] == 0 else 1


def cmd_special(args) -> int:
    t = parse_triangle(args)
    report = _degenerate(t, args.case)
    _emit(report.to_json())
    _summarize(args, report)
    return 0 if report.ok else 1


def cmd_figure(args) -> int:
    t = parse_triangle(args)
    res = construct_instance(t, args.point, args.allow_exterior)
    emb = CartesianEmbedding.from_triangle(t)
    svg = render(res, emb, RenderOptions(size=args.size, labels=args.labels == "on"))
    Path(args.out).write_text(svg)
    _emit({
        "out": args.out,
        "circles": svg.count("<circle"),
        "lines": svg.count("<line"),
        "labels": svg.count("<text"),
        "max_residual": max_residual(res, emb),
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hagge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def triangle_flags(p):
        p.add_argument("--triangle", default="4,5,6", help="squared side lengths a^2,b^2,c^2 (rationals)")
        p.add_argument("--sides", help="side lengths a,b,c, squared before use")
        p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("verify", help="run the checklist on one instance")
    triangle_flags(p)
    p.add_argument("--point", default="g", help="x,y,z or one of g, h, k")
    p.add_argument("--symbolic", action="store_true", help="generic triangle, P = G")
    p.add_argument("--generic", action="store_true", help="generic triangle and generic P (budgeted)")
    p.add_argument("--max-terms", type=int, default=50_000)
    p.add_argument("--seconds", type=float, default=60.0)
    p.add_argument("--allow-exterior", action="store_true", help="probe starting points outside ABC")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="random rational instances")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-coord", type=int, default=40)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("special", help="orthocentre or symmedian start")
    triangle_flags(p)
    p.add_argument("--case", choices=["h", "k"], required=True)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("figure", help="write an SVG of the construction")
    triangle_flags(p)
    p.add_argument("--point", default="g")
    p.add_argument("--out", default="figure.svg")
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--labels", choices=["on", "off"], default="on")
    p.add_argument("--allow-exterior", action="store_true")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GeometryError, ZeroDivisionError) as exc:
        print(f"hagge {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
