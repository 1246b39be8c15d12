import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from hagge.areal import GeometryError, InvalidTriangleError, Point, Triangle, second_intersection

settings.register_profile(
    "hagge", max_examples=250, derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("hagge")

N_PROPERTY = 250


def random_triangle(rng: random.Random, top: int = 60) -> Triangle:
    while True:
        vals = [Fraction(rng.randint(1, top), rng.randint(1, 4)) for _ in range(3)]
        try:
            return Triangle(*vals)
        except InvalidTriangleError:
            continue


def random_point(rng: random.Random, top: int = 50, interior: bool = False) -> Point:
    lo = 1 if interior else -top
    while True:
        coords = [rng.randint(lo, top) for _ in range(3)]
        if any(coords) and (not interior or all(coords)):
            return Point(*coords)


def random_circle_point(rng: random.Random, t: Triangle) -> Point:
    A = Point(1, 0, 0)
    while True:
        q = random_point(rng)
        try:
            return second_intersection(t, A, q)
        except GeometryError:
            continue


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def t456():
    return Triangle(4, 5, 6)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, note: str = "") -> None:
    ACCEPTANCE[number] = (ok, note)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {note}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {note}".rstrip())
