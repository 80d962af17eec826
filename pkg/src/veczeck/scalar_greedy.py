"""Greedy Zeckendorf decomposition for scalar k-bonacci numbers."""

from __future__ import annotations

from bisect import bisect_right

from .core import KBonacciContext


def greedy_decompose(ctx: KBonacciContext, m: int) -> tuple[int, ...]:
    """Decompose m >= 0 into distinct x_l with l >= 2, largest summand first.

    Because x_1 = x_2 = 1, index 1 is never used; the greedy choice at each
    step is the largest l with x_l <= remainder.  Returns the indices as an
    ascending tuple.  The output never contains k consecutive indices.
    """
    if m < 0:
        raise ValueError(f"greedy decomposition needs m >= 0, got {m}")
    if m == 0:
        return ()
    k = ctx.k
    offset = k - 2  # cache position of x_n is n + offset
    # extend the cache until it strictly exceeds m
    top = 2
    while ctx.scalar(top) <= m:
        top += 1
        ctx.tick()
    cache = ctx._scalars
    out: list[int] = []
    rem = m
    lo = 2 + offset
    while rem > 0:
        # values are strictly increasing for n >= 2, so bisect applies
        pos = bisect_right(cache, rem, lo, top + offset) - 1
        l = pos - offset
        out.append(l)
        rem -= cache[pos]
        ctx.tick(l.bit_length() + 1)
    return tuple(reversed(out))


def scalar_min_summands_bruteforce(
    ctx: KBonacciContext, m: int, max_index: int, budget: int = 16
) -> int | None:
    """Minimal number of x_l summands (l in [2, max_index], repeats allowed)
    that total m, searching sizes 0..budget.  Returns None when no multiset
    within the bounds works, which is an inconclusive result rather than a
    proof that m needs more summands.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return 0
    values = [ctx.scalar(l) for l in range(2, max_index + 1)]

    def exists(start: int, remaining: int, target: int) -> bool:
        if remaining == 0:
            return target == 0
        if target <= 0:
            return False
        for pos in range(start, len(values)):
            val = values[pos]
            if val > target:
                break
            if exists(pos, remaining - 1, target - val):
                return True
        return False

    for size in range(1, budget + 1):
        if exists(0, size, m):
            return size
    return None
