"""Exact areal-coordinate kernel for Hagge circles and their companions."""

from .areal import Circle, Line, Point, Triangle
from .construct import ConstructionResult, StartKind, classify, run, run_degenerate_h, run_degenerate_k
from .verify import CheckReport, check_all, check_degenerate, check_equation_reproduction

__all__ = [
    "Circle",
    "Line",
    "Point",
    "Triangle",
    "ConstructionResult",
    "StartKind",
    "classify",
    "run",
    "run_degenerate_h",
    "run_degenerate_k",
    "CheckReport",
    "check_all",
    "check_degenerate",
    "check_equation_reproduction",
]
