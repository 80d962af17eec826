"""Benchmark harness: strategy timing, operation counts, and j-bound growth."""

from __future__ import annotations

import csv
import math
import random
import statistics
import time
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .core import KBonacciContext, OpCounter, VecZ
from .errors import StrategyMismatch
from .solver import (
    find_sr_with_bound,
    large_steps_decomposition,
    reference_recursive_sr,
    small_steps_bound,
)

STRATEGIES = ("small_steps", "large_steps", "reference")


@dataclass(frozen=True)
class BenchRecord:
    k: int
    v: VecZ
    strategy: str
    j_value: int | None
    sr_length: int
    op_count: int
    wall_ns: int


@dataclass(frozen=True)
class ScatterPoint:
    v: VecZ
    l2_norm: float
    j_lsb: int
    bound: float
    violated: bool


@dataclass(frozen=True)
class ScatterResult:
    k: int
    c: float
    d: float
    points: list[ScatterPoint]
    violations: list[VecZ]
    max_ratio: float


def sample_vectors(k: int, norm_bound: int, count: int, seed: int) -> list[VecZ]:
    """Deterministic uniform sample of nonzero vectors with max-norm bound."""
    rng = random.Random(seed)
    out: list[VecZ] = []
    while len(out) < count:
        v = tuple(rng.randint(-norm_bound, norm_bound) for _ in range(k - 1))
        if any(v):
            out.append(v)
    return out


def run_benchmark(k: int, norm_bound: int, count: int, seed: int) -> list[BenchRecord]:
    """One record per (vector, strategy); every run gets a fresh context so
    its counter sees all cache-building arithmetic.  The three strategies
    must agree on each SR or :class:`StrategyMismatch` is raised."""
    records: list[BenchRecord] = []
    for v in sample_vectors(k, norm_bound, count, seed):
        results = {}
        for strategy in STRATEGIES:
            counter = OpCounter()
            ctx = KBonacciContext(k, counter=counter)
            t0 = time.perf_counter_ns()
            if strategy == "reference":
                sr = reference_recursive_sr(ctx, v)
                j_value = None
            else:
                sr, bound = find_sr_with_bound(ctx, v, strategy)
                j_value = bound.value if bound is not None else None
            wall = time.perf_counter_ns() - t0
            results[strategy] = sr
            records.append(
                BenchRecord(k, v, strategy, j_value, len(sr), counter.count, wall)
            )
        baseline = results[STRATEGIES[0]]
        for strategy, sr in results.items():
            if sr != baseline:
                raise StrategyMismatch(
                    f"{strategy} returned {sr}, {STRATEGIES[0]} returned {baseline} for {v}"
                )
    return records


def jbound_medians(
    k: int, bounds: Sequence[int], count: int, seed: int
) -> dict[int, dict[str, float]]:
    """Median j_ssb and j_lsb per norm bound, without full SR solves."""
    out: dict[int, dict[str, float]] = {}
    for idx, bound in enumerate(bounds):
        ctx = KBonacciContext(k)
        ssb: list[int] = []
        lsb: list[int] = []
        for v in sample_vectors(k, bound, count, seed + idx):
            ssb.append(small_steps_bound(ctx, v).value)
            lsb.append(large_steps_decomposition(ctx, v)[1].value)
        out[bound] = {
            "j_ssb": float(statistics.median(ssb)),
            "j_lsb": float(statistics.median(lsb)),
        }
    return out


def jbound_scatter(
    k: int,
    norm_bound: int,
    count: int | None,
    c: float,
    d: float,
    seed: int = 0,
) -> ScatterResult:
    """Check j_lsb <= c * ln ||v||_2 + d over a box of vectors.

    count=None scans the whole box ||v||_inf <= norm_bound exhaustively
    (zero vector excluded); otherwise `count` vectors are sampled.
    """
    ctx = KBonacciContext(k)
    if count is None:
        vectors: Iterable[VecZ] = (
            v
            for v in product(range(-norm_bound, norm_bound + 1), repeat=k - 1)
            if any(v)
        )
    else:
        vectors = sample_vectors(k, norm_bound, count, seed)
    points: list[ScatterPoint] = []
    violations: list[VecZ] = []
    max_ratio = 0.0
    for v in vectors:
        j = large_steps_decomposition(ctx, v)[1].value
        norm = math.sqrt(sum(comp * comp for comp in v))
        bound_val = c * math.log(norm) + d
        violated = j > bound_val
        ratio = j / bound_val if bound_val > 0 else math.inf
        if ratio > max_ratio:
            max_ratio = ratio
        if violated:
            violations.append(v)
        points.append(ScatterPoint(v, norm, j, bound_val, violated))
    return ScatterResult(k, c, d, points, violations, max_ratio)


def loglog_slope(points: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    xs = [math.log(x) for x, _ in points]
    ys = [math.log(y) for _, y in points]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def median_op_count(records: Iterable[BenchRecord], strategy: str) -> float:
    vals = [r.op_count for r in records if r.strategy == strategy]
    return float(statistics.median(vals))


def small_steps_op_slope(
    k: int, bounds: Sequence[int], count: int, seed: int
) -> float:
    """Log-log growth rate of the small-steps op count against the norm bound."""
    points = []
    for idx, bound in enumerate(bounds):
        records = run_benchmark(k, bound, count, seed + idx)
        points.append((float(bound), median_op_count(records, "small_steps")))
    return loglog_slope(points)


def write_bench_csv(records: Iterable[BenchRecord], path: str) -> None:
    records = list(records)
    if not records:
        raise ValueError("no records to write")
    dim = records[0].k - 1
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["k"]
            + [f"v{i}" for i in range(1, dim + 1)]
            + ["strategy", "j", "sr_length", "op_count", "wall_ns"]
        )
        for r in records:
            writer.writerow(
                [r.k]
                + list(r.v)
                + [r.strategy, "" if r.j_value is None else r.j_value,
                   r.sr_length, r.op_count, r.wall_ns]
            )


def write_scatter_csv(result: ScatterResult, path: str) -> None:
    with open(path, "w", newline="") as fh:
        _write_scatter_rows(result, fh)


def _write_scatter_rows(result: ScatterResult, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["l2_norm", "j_lsb", "bound", "violated"])
    for p in result.points:
        writer.writerow([repr(p.l2_norm), p.j_lsb, repr(p.bound), int(p.violated)])
