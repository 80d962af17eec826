"""Arbitrary-precision k-bonacci scalars and the backward vector family.

The scalar sequence satisfies x_n = x_{n-1} + ... + x_{n-k} with seeds
x_n = 0 for -(k-2) <= n <= 0 and x_1 = 1.  The vector family lives in
Z^(k-1): X_0 = 0, X_{-i} = e_i for 1 <= i <= k-1, and deeper terms follow
the backward recurrence X_{-m} = X_{-(m-k)} - sum_{j=1}^{k-1} X_{-(m-j)}.
All arithmetic is exact (Python integers); nothing here uses floats.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import IndexOutOfDomain

VecZ = tuple[int, ...]


class Norms(NamedTuple):
    l1: int
    linf: int
    l2_squared: int


class OpCounter:
    """Mutable counter of primitive big-integer operations.

    Solvers treat one addition, subtraction, multiplication, comparison or
    modular reduction on cached arbitrary-precision values as one operation.
    The accounting is deliberately coarse; benchmark consumers only rely on
    growth trends, not absolute counts.
    """

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, n: int = 1) -> None:
        self.count += n


class KBonacciContext:
    """Per-order cache of k-bonacci numbers and k-bonacci vectors.

    Caches grow on demand and are never evicted.  Cached values are handed
    out as immutable tuples/ints, so concurrent readers are safe once a
    single thread has warmed the cache past the indices it needs.

    An optional :class:`OpCounter` attached at construction is ticked by the
    cache-extension loops and by the solver layers above, which lets a
    benchmark attribute all arithmetic for one run to one counter.
    """

    __slots__ = ("k", "counter", "_scalars", "_vectors", "_vnorms_sq")

    def __init__(self, k: int, counter: OpCounter | None = None):
        if k < 2:
            raise ValueError(f"order k must be >= 2, got {k}")
        self.k = k
        self.counter = counter
        # _scalars[p] holds x_{p-(k-2)}; seeded with the k-2 zeros, x_0 = 0
        # and x_1 = 1, so the sum-of-last-k recurrence applies from x_2 on.
        self._scalars: list[int] = [0] * (k - 1) + [1]
        self._vectors: list[VecZ] | None = None
        self._vnorms_sq: list[int] | None = None

    # -- scalar sequence -------------------------------------------------

    def scalar(self, n: int) -> int:
        """Return x_n, extending the cache as needed."""
        k = self.k
        pos = n + k - 2
        if pos < 0:
            raise IndexOutOfDomain(
                f"x_n is defined for n >= {-(k - 2)}, got n = {n}"
            )
        cache = self._scalars
        if len(cache) <= pos:
            counter = self.counter
            while len(cache) <= pos:
                cache.append(sum(cache[-k:]))
                if counter is not None:
                    counter.add(k - 1)
        return cache[pos]

    # -- backward vector family ------------------------------------------

    def _ensure_vectors(self) -> list[VecZ]:
        if self._vectors is None:
            if self.k < 3:
                raise ValueError("vector operations require k >= 3")
            dim = self.k - 1
            seeds: list[VecZ] = [(0,) * dim]
            for i in range(dim):
                e = [0] * dim
                e[i] = 1
                seeds.append(tuple(e))
            self._vectors = seeds
            self._vnorms_sq = [sum(c * c for c in v) for v in seeds]
        return self._vectors

    def vector(self, depth: int) -> VecZ:
        """Return X_{-depth} for depth >= 0."""
        if depth < 0:
            raise IndexOutOfDomain(f"vector depth must be >= 0, got {depth}")
        vecs = self._ensure_vectors()
        if len(vecs) <= depth:
            k = self.k
            dim = k - 1
            norms = self._vnorms_sq
            counter = self.counter
            while len(vecs) <= depth:
                m = len(vecs)
                acc = list(vecs[m - k])
                for j in range(1, k):
                    prev = vecs[m - j]
                    for t in range(dim):
                        acc[t] -= prev[t]
                new = tuple(acc)
                vecs.append(new)
                norms.append(sum(c * c for c in new))
                if counter is not None:
                    counter.add(dim * k)
        return vecs[depth]

    def vector_norm_sq(self, depth: int) -> int:
        """Squared Euclidean norm of X_{-depth}, cached alongside the vector."""
        self.vector(depth)
        return self._vnorms_sq[depth]

    def tick(self, n: int = 1) -> None:
        if self.counter is not None:
            self.counter.add(n)


def kbonacci_number(ctx: KBonacciContext, n: int) -> int:
    """The scalar k-bonacci number x_n."""
    return ctx.scalar(n)


def kbonacci_vector(ctx: KBonacciContext, depth: int) -> VecZ:
    """The k-bonacci vector X_{-depth} in Z^(k-1)."""
    return ctx.vector(depth)


def vector_norms(v: VecZ) -> Norms:
    """l1, l-infinity and squared l2 norms of an integer vector."""
    return Norms(
        l1=sum(abs(c) for c in v),
        linf=max((abs(c) for c in v), default=0),
        l2_squared=sum(c * c for c in v),
    )
