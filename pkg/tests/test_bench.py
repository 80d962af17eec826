"""Benchmark harness: sampling, records, scatter checks, CSV output."""

import csv
import math

import pytest

from veczeck import KBonacciContext
from veczeck.bench import (
    STRATEGIES,
    jbound_medians,
    jbound_scatter,
    loglog_slope,
    median_op_count,
    run_benchmark,
    sample_vectors,
    small_steps_op_slope,
    write_bench_csv,
    write_scatter_csv,
)
from veczeck.solver import small_steps_bound


def test_sample_vectors_deterministic_and_nonzero():
    a = sample_vectors(3, 25, 40, 7)
    b = sample_vectors(3, 25, 40, 7)
    assert a == b
    assert all(any(v) for v in a)
    assert all(max(abs(c) for c in v) <= 25 for v in a)
    assert sample_vectors(3, 25, 40, 8) != a


def test_run_benchmark_records():
    records = run_benchmark(3, 20, 10, 3)
    assert len(records) == 30
    ctx = KBonacciContext(3)
    by_vec = {}
    for r in records:
        assert r.k == 3
        assert r.strategy in STRATEGIES
        assert r.op_count > 0
        assert r.wall_ns > 0
        by_vec.setdefault(r.v, {})[r.strategy] = r
    for v, group in by_vec.items():
        assert set(group) == set(STRATEGIES)
        # all strategies agreed, so lengths coincide
        lengths = {r.sr_length for r in group.values()}
        assert len(lengths) == 1
        assert group["reference"].j_value is None
        assert group["small_steps"].j_value == small_steps_bound(ctx, v).value


def test_scatter_exhaustive_box():
    result = jbound_scatter(3, 20, None, 15.0, 10.0, 0)
    assert len(result.points) == 41 * 41 - 1
    assert result.violations == []
    assert result.max_ratio < 1.0
    # points carry the evaluated bound
    p = result.points[0]
    assert p.bound == pytest.approx(15.0 * math.log(p.l2_norm) + 10.0)


def test_scatter_sampled_is_deterministic():
    r1 = jbound_scatter(3, 50, 30, 15.0, 10.0, 5)
    r2 = jbound_scatter(3, 50, 30, 15.0, 10.0, 5)
    assert [p.v for p in r1.points] == [p.v for p in r2.points]
    assert len(r1.points) == 30


def test_scatter_flags_violations_with_absurd_constants():
    # c = d = 0 cannot dominate any positive j value
    result = jbound_scatter(3, 4, None, 0.0, 0.0, 0)
    assert result.violations
    assert result.max_ratio == math.inf or result.max_ratio > 1.0


def test_bench_csv_round_trip(tmp_path):
    records = run_benchmark(3, 15, 5, 1)
    path = tmp_path / "bench.csv"
    write_bench_csv(records, str(path))
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["k", "v1", "v2", "strategy", "j", "sr_length", "op_count", "wall_ns"]
    assert len(rows) == 1 + len(records)
    ref_rows = [r for r in rows[1:] if r[3] == "reference"]
    assert all(r[4] == "" for r in ref_rows)
    assert all(int(r[6]) > 0 for r in rows[1:])


def test_scatter_csv_round_trip(tmp_path):
    result = jbound_scatter(3, 8, None, 15.0, 10.0, 0)
    path = tmp_path / "scatter.csv"
    write_scatter_csv(result, str(path))
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["l2_norm", "j_lsb", "bound", "violated"]
    assert len(rows) == 1 + len(result.points)
    # repr round-trips the floats exactly
    for row, point in zip(rows[1:], result.points):
        assert float(row[0]) == point.l2_norm
        assert int(row[1]) == point.j_lsb
        assert float(row[2]) == point.bound


def test_loglog_slope_exact_power_law():
    pts = [(x, x**1.5) for x in (2.0, 4.0, 8.0, 16.0)]
    assert loglog_slope(pts) == pytest.approx(1.5)


def test_jbound_medians_shape():
    med = jbound_medians(3, (50, 200), 30, 2)
    assert set(med) == {50, 200}
    for bound in med:
        assert set(med[bound]) == {"j_ssb", "j_lsb"}
        assert med[bound]["j_ssb"] > med[bound]["j_lsb"]


def test_median_op_count_and_slope_smoke():
    records = run_benchmark(3, 30, 8, 9)
    assert median_op_count(records, "small_steps") > 0
    slope = small_steps_op_slope(3, (10, 20), 12, 0)
    assert isinstance(slope, float)
