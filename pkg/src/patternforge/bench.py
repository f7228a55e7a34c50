"""Wall-clock benchmarks with fitted log-log growth exponents."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .detectors import (
    detect_c4_or_coclaw,
    detect_c4_or_diamond,
    detect_c4_or_k4,
    detect_c4_or_paw,
    detect_c4_or_triangle,
    detect_k4_or_i4,
    noninduced_c4,
)
from .errors import InputError
from .generators import gnp, random_tree
from .graphs import Graph

BENCH_DETECTORS: dict[str, Callable[[Graph], object]] = {
    "detect_c4_or_triangle": detect_c4_or_triangle,
    "detect_c4_or_diamond": detect_c4_or_diamond,
    "detect_c4_or_k4": detect_c4_or_k4,
    "detect_c4_or_paw": detect_c4_or_paw,
    "detect_c4_or_coclaw": detect_c4_or_coclaw,
    "detect_k4_or_i4": detect_k4_or_i4,
    "noninduced_c4": noninduced_c4,
}


@dataclass
class BenchRow:
    n: int
    median_seconds: float
    trials: int


@dataclass
class BenchResult:
    detector: str
    model: str
    rows: list[BenchRow]
    slope: float

    def lines(self) -> list[str]:
        out = [f"bench {self.detector} model={self.model}"]
        for row in self.rows:
            out.append(f"  n={row.n:<8d} median={row.median_seconds:.4f}s ({row.trials} trials)")
        out.append(f"  fitted log-log slope: {self.slope:.2f}")
        for row in self.rows:
            out.append(f"@bench,{self.detector},{self.model},{row.n},{row.median_seconds:.6f}")
        out.append(f"@slope,{self.detector},{self.model},{self.slope:.4f}")
        return out


def _make_instance(model: str, n: int, seed: int) -> Graph:
    if model == "c4free":
        return random_tree(n, seed)
    if model.startswith("gnp:"):
        return gnp(n, float(model.split(":", 1)[1]), seed)
    raise InputError(f"unknown bench model {model!r} (use gnp:<p> or c4free)")


def fitted_slope(points: Sequence[tuple[int, float]]) -> float:
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    num = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    den = sum((x - mean_x) ** 2 for x in xs)
    return num / den if den else 0.0


def run_bench(
    detector: str,
    sizes: Sequence[int],
    model: str = "c4free",
    trials: int = 3,
    seed: int = 0,
) -> BenchResult:
    if detector not in BENCH_DETECTORS:
        raise InputError(f"unknown detector {detector!r}")
    fn = BENCH_DETECTORS[detector]
    rows = []
    for n in sizes:
        times = []
        for t in range(trials):
            g = _make_instance(model, n, seed * 101 + t)
            t0 = time.perf_counter()
            fn(g)
            times.append(time.perf_counter() - t0)
        times.sort()
        rows.append(BenchRow(n, times[len(times) // 2], trials))
    slope = fitted_slope([(r.n, r.median_seconds) for r in rows])
    return BenchResult(detector, model, rows, slope)
