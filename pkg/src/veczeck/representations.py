"""Satisfying representations: legality, evaluation, projection, bijection.

A satisfying representation (SR) of a vector v in Z^(k-1) is a sum of
distinct k-bonacci vectors X_{-i} whose index set contains no k consecutive
integers.  Every integer vector has exactly one SR; the solvers in
:mod:`veczeck.solver` compute it, while this module owns the data model.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .core import KBonacciContext, VecZ
from .errors import IndexOutOfDomain, NotSatisfying
from .scalar_greedy import greedy_decompose

IndexSet = tuple[int, ...]


def as_index_set(indices: Iterable[int]) -> IndexSet:
    """Normalize an iterable of indices into a sorted, validated IndexSet."""
    xs = sorted(int(i) for i in indices)
    if xs and xs[0] < 1:
        raise NotSatisfying(f"indices must be >= 1, got {xs[0]}")
    for a, b in zip(xs, xs[1:]):
        if a == b:
            raise NotSatisfying(f"duplicate index {a}")
    return tuple(xs)


def is_satisfying(indices: Iterable[int], k: int) -> bool:
    """True iff the indices are distinct, >= 1, with no k consecutive values."""
    xs = sorted(indices)
    if xs and xs[0] < 1:
        return False
    run = 1
    for a, b in zip(xs, xs[1:]):
        if a == b:
            return False
        run = run + 1 if b == a + 1 else 1
        if run >= k:
            return False
    return True


def max_index_J(indices: Iterable[int]) -> int:
    """J(v): the largest index in the SR, with J = 0 for the empty set."""
    return max(indices, default=0)


def evaluate_vector(ctx: KBonacciContext, indices: Iterable[int]) -> VecZ:
    """Sum of X_{-i} over the index set (empty set gives the zero vector)."""
    dim = ctx.k - 1
    acc = [0] * dim
    count = 0
    for i in indices:
        vec = ctx.vector(i)
        for t in range(dim):
            acc[t] += vec[t]
        count += 1
    ctx.tick(dim * count)
    return tuple(acc)


def project_Sn(ctx: KBonacciContext, v: VecZ, n: int) -> int:
    """The scalar projection S_n(v) = v . (x_{n-1}, ..., x_{n-(k-1)}) mod x_n.

    Returns the canonical residue in [0, x_n).  Defined for n >= k-2; the
    values n < k are degenerate (modulus 1) and only exercised by edge tests.
    """
    k = ctx.k
    if len(v) != k - 1:
        raise ValueError(f"vector has dimension {len(v)}, expected {k - 1}")
    if n < k - 2:
        raise IndexOutOfDomain(f"projection requires n >= {k - 2}, got n = {n}")
    dot = 0
    for i, comp in enumerate(v, start=1):
        dot += comp * ctx.scalar(n - i)
    ctx.tick(2 * (k - 1) + 1)
    return dot % ctx.scalar(n)


def sr_to_integer_f(ctx: KBonacciContext, indices: Iterable[int]) -> int:
    """The bijection f(s) = sum of x_{i+1} over i in s, mapping SRs onto Z>=0."""
    s = as_index_set(indices)
    if not is_satisfying(s, ctx.k):
        raise NotSatisfying(f"{s} contains {ctx.k} consecutive indices")
    return sum(ctx.scalar(i + 1) for i in s)


def integer_to_sr_f_inverse(ctx: KBonacciContext, m: int) -> IndexSet:
    """Inverse of f: scalar-greedy decompose m, then shift indices down by one."""
    if m < 0:
        raise ValueError(f"f^-1 is defined on nonnegative integers, got {m}")
    return tuple(sorted(l - 1 for l in greedy_decompose(ctx, m)))


# -- word-model enumeration ----------------------------------------------
#
# SRs with max index exactly n correspond to binary words of length n that
# start with 1 and avoid 1^k: letter j of the word records whether index
# n+1-j is present.  Enumeration below is in lexicographic word order.


def iter_layer_sets(k: int, n: int) -> Iterator[IndexSet]:
    """Yield every satisfying IndexSet with max index exactly n, once each."""
    if n < 1:
        return
    ones = [1]

    def rec(pos: int, run: int) -> Iterator[IndexSet]:
        if pos > n:
            yield tuple(n + 1 - p for p in reversed(ones))
            return
        yield from rec(pos + 1, 0)
        if run < k - 1:
            ones.append(pos)
            yield from rec(pos + 1, run + 1)
            ones.pop()

    yield from rec(2, 1)


def iter_satisfying_sets(k: int, max_index: int) -> Iterator[IndexSet]:
    """Yield every satisfying IndexSet with max index <= max_index.

    Starts with the empty set (the SR of the zero vector), then layers in
    ascending order of their max index.
    """
    yield ()
    for n in range(1, max_index + 1):
        yield from iter_layer_sets(k, n)
