"""Figure rendering for the report path.

Every function takes data already computed by the library and writes one
PNG next to the delimited outputs.  Rendering is head-less (Agg).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRecord, ScatterResult  # noqa: E402
from .core import VecZ  # noqa: E402
from .stats import GapHistogram, LayerStats  # noqa: E402

_STYLE = {"figure.figsize": (7.0, 4.5), "axes.grid": True, "grid.alpha": 0.3}


def save_gap_comparison(
    hist: GapHistogram, law: dict[int, float], path: str
) -> None:
    """Empirical gap probabilities against the limiting law."""
    ls = sorted(set(hist.counts) | set(law))
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.bar(ls, [hist.probability(l) for l in ls], width=0.7,
               label=f"layer n={hist.n}", color="#4878cf")
        ax.plot(ls, [law.get(l, 0.0) for l in ls], "o-", color="#d65f5f",
                label="limiting law")
        ax.set_xlabel("gap length")
        ax.set_ylabel("probability")
        ax.set_yscale("log")
        ax.set_title(f"Gap distribution, k={hist.k}")
        ax.legend()
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)


def save_jbound_scatter(result: ScatterResult, path: str) -> None:
    """j_lsb against the vector norm with the logarithmic bound curve."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ok = [p for p in result.points if not p.violated]
        bad = [p for p in result.points if p.violated]
        ax.scatter([p.l2_norm for p in ok], [p.j_lsb for p in ok], s=6,
                   alpha=0.35, color="#4878cf", label="j_lsb")
        if bad:
            ax.scatter([p.l2_norm for p in bad], [p.j_lsb for p in bad], s=14,
                       color="#d65f5f", label="violations")
        curve = sorted(result.points, key=lambda p: p.l2_norm)
        ax.plot([p.l2_norm for p in curve], [p.bound for p in curve],
                color="#2e2e2e", label=f"{result.c}*ln|v| + {result.d}")
        ax.set_xscale("log")
        ax.set_xlabel("||v||_2")
        ax.set_ylabel("index bound")
        ax.set_title(f"Large-steps bound growth, k={result.k}")
        ax.legend()
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)


def save_layer_moment_trends(stats_seq: Sequence[LayerStats], path: str) -> None:
    """Mean and variance of the summand count per layer."""
    ns = [s.n for s in stats_seq]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.plot(ns, [float(s.mean) for s in stats_seq], "o-",
                color="#4878cf", label="mean")
        ax.plot(ns, [float(s.variance) for s in stats_seq], "s-",
                color="#6acc65", label="variance")
        ax.set_xlabel("layer n")
        ax.set_ylabel("summand count moment")
        k = stats_seq[0].k if stats_seq else 0
        ax.set_title(f"Summand count moments, k={k}")
        ax.legend()
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)


def save_dn_cloud(points: Iterable[tuple[VecZ, int]], path: str, k: int) -> None:
    """Point cloud of the first two vector coordinates, colored by max index."""
    pts = list(points)
    xs = [v[0] for v, _ in pts]
    ys = [v[1] if len(v) > 1 else 0 for v, _ in pts]
    js = [j for _, j in pts]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.0, 6.0))
        sc = ax.scatter(xs, ys, c=js, s=4, cmap="viridis")
        fig.colorbar(sc, ax=ax, label="max index J")
        ax.set_xlabel("v1")
        ax.set_ylabel("v2")
        ax.set_title(f"Representable vectors by depth, k={k}")
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)


def save_bench_opcounts(records: Sequence[BenchRecord], path: str) -> None:
    """Operation-count spread per strategy."""
    strategies = sorted({r.strategy for r in records})
    data = [[r.op_count for r in records if r.strategy == s] for s in strategies]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.boxplot(data, tick_labels=strategies)
        ax.set_ylabel("op count")
        ax.set_yscale("log")
        k = records[0].k if records else 0
        ax.set_title(f"Strategy cost spread, k={k}")
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
