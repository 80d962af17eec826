"""Layer statistics: summand counts, gap spectra, and the limiting gap law.

The layer at level n is the set of vectors whose SR has max index exactly
n.  Layers are enumerated through the word model (length-n binary words,
first letter 1, no k consecutive 1s); the summand count is the number of
1s and the gaps are the distances between consecutive 1s, so both
histograms are read straight off the words without materializing vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .core import KBonacciContext
from .representations import IndexSet, iter_layer_sets
from .spectral import SpectralData


@dataclass(frozen=True)
class LayerStats:
    n: int
    k: int
    count: int
    kappa_histogram: dict[int, int]
    mean: Fraction
    variance: Fraction
    skewness: float
    excess_kurtosis: float


@dataclass(frozen=True)
class GapHistogram:
    n: int
    k: int
    counts: dict[int, int]
    n_gaps: int

    def probability(self, l: int) -> float:
        if self.n_gaps == 0:
            return 0.0
        return self.counts.get(l, 0) / self.n_gaps


def enumerate_layer(ctx: KBonacciContext, n: int) -> Iterator[IndexSet]:
    """Every satisfying IndexSet with max index exactly n, in word order."""
    if n < 1:
        raise ValueError(f"layers are defined for n >= 1, got {n}")
    return iter_layer_sets(ctx.k, n)


@lru_cache(maxsize=None)
def _accumulate_layer(k: int, n: int) -> tuple[dict[int, int], dict[int, int]]:
    """One DFS over the layer words collecting both histograms.

    Returns (ones-count histogram, gap histogram).  Gap lengths are the
    differences between consecutive one positions; the leading run before
    the first summand is not a gap.
    """
    kappa: dict[int, int] = {}
    gaps: dict[int, int] = {}
    ones = [1]

    def rec(pos: int, run: int) -> None:
        if pos > n:
            c = len(ones)
            kappa[c] = kappa.get(c, 0) + 1
            prev = ones[0]
            for p in ones[1:]:
                d = p - prev
                gaps[d] = gaps.get(d, 0) + 1
                prev = p
            return
        rec(pos + 1, 0)
        if run < k - 1:
            ones.append(pos)
            rec(pos + 1, run + 1)
            ones.pop()

    rec(2, 1)
    return kappa, gaps


def _central_moments(hist: dict[int, int]):
    count = sum(hist.values())
    mean = Fraction(sum(v * f for v, f in hist.items()), count)
    m2 = m3 = m4 = Fraction(0)
    for v, f in hist.items():
        d = v - mean
        d2 = d * d
        m2 += f * d2
        m3 += f * d2 * d
        m4 += f * d2 * d2
    m2 /= count
    m3 /= count
    m4 /= count
    return count, mean, m2, m3, m4


def layer_stats(ctx: KBonacciContext, n: int) -> LayerStats:
    """Exact summand-count moments of layer n (skew/kurtosis as floats)."""
    if n < 1:
        raise ValueError(f"layers are defined for n >= 1, got {n}")
    kappa, _ = _accumulate_layer(ctx.k, n)
    count, mean, m2, m3, m4 = _central_moments(kappa)
    if m2 > 0:
        sd = math.sqrt(float(m2))
        skew = float(m3) / sd**3
        kurt = float(m4) / float(m2) ** 2 - 3.0
    else:
        skew = 0.0
        kurt = 0.0
    return LayerStats(
        n=n,
        k=ctx.k,
        count=count,
        kappa_histogram=dict(sorted(kappa.items())),
        mean=mean,
        variance=m2,
        skewness=skew,
        excess_kurtosis=kurt,
    )


def gap_histogram(ctx: KBonacciContext, n: int) -> GapHistogram:
    """Histogram of gaps between consecutive summand indices over layer n."""
    if n < 1:
        raise ValueError(f"layers are defined for n >= 1, got {n}")
    _, gaps = _accumulate_layer(ctx.k, n)
    return GapHistogram(
        n=n,
        k=ctx.k,
        counts=dict(sorted(gaps.items())),
        n_gaps=sum(gaps.values()),
    )


def limiting_gap_law(spectral: SpectralData, l: int) -> float:
    """Limiting probability of a gap of length l.

    P(0) = 0, P(1) = (lambda1 (1 - 2 a1) + a1) / (lambda1 c_lek), and for
    l >= 2 a geometric tail P(l) = (lambda1 - 1)^2 (a1 / c_lek) lambda1^-l.
    The constants are convention dependent; see gap_law_normalization.
    """
    if l < 0:
        raise ValueError(f"gap length must be >= 0, got {l}")
    lam = spectral.lambda1
    a1 = spectral.a1
    c = spectral.c_lek
    if l == 0:
        return 0.0
    if l == 1:
        return (lam * (1.0 - 2.0 * a1) + a1) / (lam * c)
    return (lam - 1.0) ** 2 * (a1 / c) * lam ** (-l)


def gap_law_normalization(spectral: SpectralData) -> float:
    """Analytic total sum_{l>=0} P(l) of the plug-in law.

    Equals P(1) plus the closed geometric tail; a value away from 1 (beyond
    about 1e-3) flags a normalization problem in the plug-in constants.
    """
    lam = spectral.lambda1
    a1 = spectral.a1
    c = spectral.c_lek
    tail = (lam - 1.0) * a1 / (c * lam)
    return limiting_gap_law(spectral, 1) + tail


def gaussian_diagnostics(
    stats_seq: Sequence[LayerStats],
) -> dict[str, dict[int, float]]:
    """Skewness and excess kurtosis per layer, for trend inspection.

    Both should drift toward zero as n grows if the summand counts are
    asymptotically normal.
    """
    skew = {s.n: s.skewness for s in stats_seq}
    kurt = {s.n: s.excess_kurtosis for s in stats_seq}
    return {"skewness": dict(sorted(skew.items())),
            "excess_kurtosis": dict(sorted(kurt.items()))}
