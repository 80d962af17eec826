"""Summand minimality: no shorter multiset of k-bonacci vectors beats the SR."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import KBonacciContext, VecZ
from .representations import evaluate_vector
from .stats import enumerate_layer


def vector_min_summands_bounded(
    ctx: KBonacciContext, v: VecZ, max_index: int, budget: int
) -> int | None:
    """Minimal size of a depth multiset (repeats allowed, depths in
    [1, max_index]) summing to v, searching sizes 0..budget.

    Returns None when nothing within the bounds works; that is an
    inconclusive answer, not a proof of impossibility.
    """
    if len(v) != ctx.k - 1:
        raise ValueError(f"vector has dimension {len(v)}, expected {ctx.k - 1}")
    target = tuple(v)
    if not any(target):
        return 0
    dim = ctx.k - 1
    vectors = [ctx.vector(d) for d in range(1, max_index + 1)]

    def exists(start: int, remaining: int, residual: tuple[int, ...]) -> bool:
        if remaining == 0:
            return not any(residual)
        for pos in range(start, len(vectors)):
            vec = vectors[pos]
            nxt = tuple(residual[t] - vec[t] for t in range(dim))
            if exists(pos, remaining - 1, nxt):
                return True
        return False

    for size in range(1, budget + 1):
        if exists(0, size, target):
            return size
    return None


@dataclass(frozen=True)
class MinimalityReport:
    k: int
    layer: int
    bound: int
    vectors_checked: int
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "layer": self.layer,
                "bound": self.bound,
                "vectors_checked": self.vectors_checked,
                "counterexamples": self.counterexamples,
            },
            separators=(",", ":"),
        )


def verify_layer_minimality(
    ctx: KBonacciContext, n: int, max_index: int
) -> MinimalityReport:
    """Check every vector in layer n: no multiset of depths up to max_index
    represents it with fewer summands than its SR."""
    counterexamples = []
    checked = 0
    for s in enumerate_layer(ctx, n):
        v = evaluate_vector(ctx, s)
        checked += 1
        shorter = vector_min_summands_bounded(ctx, v, max_index, len(s) - 1)
        if shorter is not None:
            counterexamples.append(
                {"v": list(v), "sr_size": len(s), "found_size": shorter}
            )
    return MinimalityReport(
        k=ctx.k,
        layer=n,
        bound=max_index,
        vectors_checked=checked,
        counterexamples=counterexamples,
    )
