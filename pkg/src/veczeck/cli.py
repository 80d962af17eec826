"""Command-line interface.

Data goes to stdout (or files given via --out); progress notes go to
stderr.  Exit codes: 0 on success, 2 on validation problems with the
arguments, 3 when an internal invariant is violated.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import __version__
from .bench import (
    jbound_scatter,
    run_benchmark,
    write_bench_csv,
    write_scatter_csv,
    _write_scatter_rows,
)
from .core import KBonacciContext
from .errors import (
    ConvergenceFailure,
    DivisionByNonUnit,
    IndexOutOfDomain,
    JBoundTooSmall,
    KBonacciError,
    MultipleFound,
    NormalizationDiverged,
    NotFound,
    NotSatisfying,
    ReconstructionMismatch,
    StrategyMismatch,
    ZeroVector,
)
from .genfunc import exact_mean, exact_variance, series_A
from .minimality import verify_layer_minimality
from .representations import evaluate_vector, max_index_J
from .solver import brute_force_sr, find_sr_with_bound, reference_recursive_sr
from .spectral import compute_spectral_data
from .stats import (
    enumerate_layer,
    gap_histogram,
    gap_law_normalization,
    layer_stats,
    limiting_gap_law,
)

_VALIDATION_ERRORS = (
    ValueError,
    IndexOutOfDomain,
    NotSatisfying,
    ZeroVector,
    NotFound,
    DivisionByNonUnit,
)
_INTERNAL_ERRORS = (
    StrategyMismatch,
    MultipleFound,
    JBoundTooSmall,
    NormalizationDiverged,
    ReconstructionMismatch,
    ConvergenceFailure,
)


def _parse_vector(text: str, k: int) -> tuple[int, ...]:
    try:
        v = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"vector {text!r} is not a comma-separated integer list")
    if len(v) != k - 1:
        raise ValueError(f"vector has dimension {len(v)}, expected {k - 1} for k={k}")
    return v


def _print_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- subcommand bodies ---------------------------------------------------


def _cmd_decompose(args) -> int:
    ctx = KBonacciContext(args.k)
    v = _parse_vector(args.v, args.k)
    if args.strategy in ("small", "large"):
        sr, _ = find_sr_with_bound(ctx, v, args.strategy)
    elif args.strategy == "reference":
        sr = reference_recursive_sr(ctx, v)
    else:
        sr = brute_force_sr(ctx, v, args.max_index)
    if args.json:
        _print_json({"indices": list(sr)})
    else:
        print(",".join(str(i) for i in sr))
    return 0


def _cmd_jbound(args) -> int:
    ctx = KBonacciContext(args.k)
    v = _parse_vector(args.v, args.k)
    _, bound = find_sr_with_bound(ctx, v, args.strategy)
    if bound is None:
        raise ZeroVector("the zero vector has no index bound; its SR is empty")
    if args.json:
        _print_json({"strategy": bound.strategy, "j": bound.value})
    else:
        print(bound.value)
    return 0


def _cmd_project(args) -> int:
    from .representations import project_Sn

    ctx = KBonacciContext(args.k)
    v = _parse_vector(args.v, args.k)
    value = project_Sn(ctx, v, args.n)
    if args.json:
        _print_json({"n": args.n, "residue": value})
    else:
        print(value)
    return 0


def _layer_row(ctx, n: int) -> dict:
    st = layer_stats(ctx, n)
    return {
        "n": st.n,
        "count": st.count,
        "mean": float(st.mean),
        "variance": float(st.variance),
        "skewness": st.skewness,
        "excess_kurtosis": st.excess_kurtosis,
    }


def _cmd_layer_stats(args) -> int:
    ctx = KBonacciContext(args.k)
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "count", "mean", "variance", "skewness", "excess_kurtosis"])
        for n in range(1, args.n + 1):
            row = _layer_row(ctx, n)
            writer.writerow(
                [row["n"], row["count"], repr(row["mean"]), repr(row["variance"]),
                 repr(row["skewness"]), repr(row["excess_kurtosis"])]
            )
    else:
        st = layer_stats(ctx, args.n)
        _print_json(
            {
                "n": st.n,
                "k": st.k,
                "count": st.count,
                "kappa_histogram": {str(c): f for c, f in st.kappa_histogram.items()},
                "mean": str(st.mean),
                "mean_decimal": float(st.mean),
                "variance": str(st.variance),
                "variance_decimal": float(st.variance),
                "skewness": st.skewness,
                "excess_kurtosis": st.excess_kurtosis,
            }
        )
    return 0


def _cmd_gaps(args) -> int:
    ctx = KBonacciContext(args.k)
    hist = gap_histogram(ctx, args.n)
    spectral = compute_spectral_data(KBonacciContext(args.k))
    law = {l: limiting_gap_law(spectral, l) for l in range(args.n)}
    total = gap_law_normalization(spectral)
    if abs(total - 1.0) > 1e-3:
        _note(f"warning: limiting law total {total!r} deviates from 1")
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "l", "count", "probability", "limiting_probability"])
        for l in range(args.n):
            writer.writerow(
                [args.n, l, hist.counts.get(l, 0),
                 repr(hist.probability(l)), repr(law[l])]
            )
    else:
        _print_json(
            {
                "n": hist.n,
                "k": hist.k,
                "n_gaps": hist.n_gaps,
                "counts": {str(l): c for l, c in hist.counts.items()},
                "law": {str(l): p for l, p in law.items()},
                "law_total": total,
                "law_normalized": abs(total - 1.0) <= 1e-3,
            }
        )
    return 0


def _cmd_genfunc(args) -> int:
    rows = []
    for n in range(1, args.n_max + 1):
        a = series_A(args.k, max(64, args.n_max)).coefficient(n)
        mean = exact_mean(args.k, n)
        var = exact_variance(args.k, n)
        rows.append((n, a, mean, var))
    if args.json:
        _print_json(
            [
                {
                    "n": n,
                    "a": int(a),
                    "mean": str(mean),
                    "mean_decimal": float(mean),
                    "variance": str(var),
                    "variance_decimal": float(var),
                }
                for n, a, mean, var in rows
            ]
        )
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(
            ["n", "a", "mean_decimal", "mean_fraction", "variance_decimal", "variance_fraction"]
        )
        for n, a, mean, var in rows:
            writer.writerow([n, int(a), repr(float(mean)), str(mean),
                             repr(float(var)), str(var)])
    return 0


def _cmd_spectral(args) -> int:
    data = compute_spectral_data(KBonacciContext(args.k))
    _print_json(data.to_json_dict())
    return 0


def _cmd_minimality(args) -> int:
    ctx = KBonacciContext(args.k)
    report = verify_layer_minimality(ctx, args.layer, args.max_index)
    print(report.to_json())
    if report.counterexamples:
        _note(f"{len(report.counterexamples)} minimality counterexamples found")
        return 3
    return 0


def _cmd_bench(args) -> int:
    records = run_benchmark(args.k, args.norm_bound, args.count, args.seed)
    write_bench_csv(records, args.out)
    _note(f"wrote {len(records)} records to {args.out}")
    summary = {}
    for strategy in sorted({r.strategy for r in records}):
        ops = sorted(r.op_count for r in records if r.strategy == strategy)
        summary[strategy] = ops[len(ops) // 2]
    _print_json({"records": len(records), "median_op_count": summary})
    return 0


def _cmd_scatter(args) -> int:
    count = None if args.count is None else args.count
    result = jbound_scatter(args.k, args.norm_bound, count, args.c, args.d, args.seed)
    if args.out:
        write_scatter_csv(result, args.out)
        _note(f"wrote {len(result.points)} points to {args.out}")
    else:
        _write_scatter_rows(result, sys.stdout)
    _note(
        f"violations: {len(result.violations)}, max ratio {result.max_ratio!r}"
    )
    if args.plot:
        from .plots import save_jbound_scatter

        save_jbound_scatter(result, args.plot)
        _note(f"figure saved to {args.plot}")
    return 0


def _cmd_dn_points(args) -> int:
    ctx = KBonacciContext(args.k)
    dim = args.k - 1
    points = [((0,) * dim, 0)]
    for n in range(1, args.n + 1):
        for s in enumerate_layer(ctx, n):
            points.append((evaluate_vector(ctx, s), max_index_J(s)))
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"v{i}" for i in range(1, dim + 1)] + ["J"])
        for v, j in points:
            writer.writerow(list(v) + [j])
    _note(f"wrote {len(points)} points to {args.out}")
    if args.plot:
        from .plots import save_dn_cloud

        save_dn_cloud(points, args.plot, args.k)
        _note(f"figure saved to {args.plot}")
    return 0


def _cmd_report(args) -> int:
    from .plots import (
        save_bench_opcounts,
        save_dn_cloud,
        save_gap_comparison,
        save_jbound_scatter,
        save_layer_moment_trends,
    )

    os.makedirs(args.out_dir, exist_ok=True)
    ctx = KBonacciContext(args.k)
    out = lambda name: os.path.join(args.out_dir, name)  # noqa: E731

    # layer statistics with moment trend figure
    stats_seq = [layer_stats(ctx, n) for n in range(1, args.layer_n + 1)]
    with open(out("layer_stats.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "count", "mean", "variance", "skewness", "excess_kurtosis"])
        for st in stats_seq:
            writer.writerow([st.n, st.count, repr(float(st.mean)),
                             repr(float(st.variance)), repr(st.skewness),
                             repr(st.excess_kurtosis)])
    save_layer_moment_trends(stats_seq, out("layer_moments.png"))

    # gap spectrum with limiting-law overlay
    spectral = compute_spectral_data(KBonacciContext(args.k))
    hist = gap_histogram(ctx, args.layer_n)
    law = {l: limiting_gap_law(spectral, l) for l in range(args.layer_n)}
    with open(out("gaps.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "l", "count", "probability", "limiting_probability"])
        for l in range(args.layer_n):
            writer.writerow([args.layer_n, l, hist.counts.get(l, 0),
                             repr(hist.probability(l)), repr(law[l])])
    save_gap_comparison(hist, law, out("gaps.png"))

    with open(out("spectral.json"), "w") as fh:
        json.dump(spectral.to_json_dict(), fh, separators=(",", ":"))

    # large-steps bound scatter
    result = jbound_scatter(args.k, args.scatter_bound, None, args.c, args.d)
    write_scatter_csv(result, out("scatter.csv"))
    save_jbound_scatter(result, out("scatter.png"))

    # representable-vector point cloud
    points = [((0,) * (args.k - 1), 0)]
    for n in range(1, args.dn_n + 1):
        for s in enumerate_layer(ctx, n):
            points.append((evaluate_vector(ctx, s), max_index_J(s)))
    with open(out("dn_points.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"v{i}" for i in range(1, args.k)] + ["J"])
        for v, j in points:
            writer.writerow(list(v) + [j])
    save_dn_cloud(points, out("dn_cloud.png"), args.k)

    # benchmark records
    records = run_benchmark(args.k, args.bench_bound, args.bench_count, args.seed)
    write_bench_csv(records, out("bench.csv"))
    save_bench_opcounts(records, out("bench.png"))

    _note(f"report written to {args.out_dir}")
    return 0


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veczeck",
        description="k-bonacci vector Zeckendorf representations and their statistics",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--k", type=int, required=True, help="recurrence order")
        return p

    p = add("decompose", _cmd_decompose, "compute the SR of a vector")
    p.add_argument("--v", required=True, help="comma-separated vector of dimension k-1")
    p.add_argument("--strategy", choices=["small", "large", "reference", "brute"],
                   default="small")
    p.add_argument("--max-index", type=int, default=16,
                   help="search bound for the brute strategy")
    p.add_argument("--json", action="store_true")

    p = add("jbound", _cmd_jbound, "compute an index bound for a vector")
    p.add_argument("--v", required=True)
    p.add_argument("--strategy", choices=["small", "large"], required=True)
    p.add_argument("--json", action="store_true")

    p = add("project", _cmd_project, "scalar projection S_n of a vector")
    p.add_argument("--v", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("layer-stats", _cmd_layer_stats, "summand-count statistics of a layer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", action="store_true",
                   help="emit rows for every layer 1..n instead of JSON for n")

    p = add("gaps", _cmd_gaps, "gap histogram of a layer with the limiting law")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", action="store_true")

    p = add("genfunc", _cmd_genfunc, "exact moment table from the counting series")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="CSV output (the default)")
    p.add_argument("--json", action="store_true")

    p = add("spectral", _cmd_spectral, "spectral constants as JSON")

    p = add("minimality", _cmd_minimality, "verify summand minimality over a layer")
    p.add_argument("--layer", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)

    p = add("bench", _cmd_bench, "run the strategy benchmark")
    p.add_argument("--norm-bound", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="CSV output path")

    p = add("scatter", _cmd_scatter, "large-steps bound against log-norm growth")
    p.add_argument("--norm-bound", type=int, required=True)
    p.add_argument("--count", type=int, default=None,
                   help="sample size; omit for the exhaustive box")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--plot", help="also render a PNG figure to this path")

    p = add("dn-points", _cmd_dn_points, "export all representable vectors up to depth n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--plot", help="also render a PNG figure to this path")

    p = add("report", _cmd_report, "write a CSV + figure bundle to a directory")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--layer-n", type=int, default=16)
    p.add_argument("--scatter-bound", type=int, default=40)
    p.add_argument("--c", type=float, default=15.0)
    p.add_argument("--d", type=float, default=10.0)
    p.add_argument("--dn-n", type=int, default=12)
    p.add_argument("--bench-bound", type=int, default=50)
    p.add_argument("--bench-count", type=int, default=20)
    p.add_argument("--seed", type=int, default=1)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INTERNAL_ERRORS as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KBonacciError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
