"""Satisfying-representation solvers.

Four routes to the unique SR of an integer vector:

* small steps: walk to v one basis/diagonal vector at a time, which yields
  an index bound linear in the entries, then reconstruct via the projection
  greedy.
* large steps: descend by repeatedly subtracting the nearest k-bonacci
  vector, which yields a logarithmic index bound, same reconstruction.
* reference recursion: peel one unit from v per step down to zero, then
  replay the steps forward, restoring the SR shape after every added term
  with value-preserving carry rewrites (:func:`normalize`).
* brute force: scan every satisfying index set up to a bound (oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .core import KBonacciContext, VecZ
from .errors import (
    JBoundTooSmall,
    MultipleFound,
    NormalizationDiverged,
    NotFound,
    ZeroVector,
)
from .representations import (
    IndexSet,
    evaluate_vector,
    is_satisfying,
    iter_satisfying_sets,
    project_Sn,
)
from .scalar_greedy import greedy_decompose


@dataclass(frozen=True)
class Decomposition:
    """A multiset of depths i (meaning X_{-i} summands) plus its origin tag."""

    terms: tuple[int, ...]
    provenance: str

    def evaluate(self, ctx: KBonacciContext) -> VecZ:
        dim = ctx.k - 1
        acc = [0] * dim
        for i in self.terms:
            vec = ctx.vector(i)
            for t in range(dim):
                acc[t] += vec[t]
        return tuple(acc)


@dataclass(frozen=True)
class JBound:
    """An upper bound j >= J(v) together with the strategy that produced it."""

    value: int
    strategy: str


def _require_nonzero(v: VecZ, what: str) -> tuple[int, ...]:
    vt = tuple(v)
    if not any(vt):
        raise ZeroVector(f"{what} requires a nonzero vector")
    return vt


def _check_dim(ctx: KBonacciContext, v: VecZ) -> None:
    if len(v) != ctx.k - 1:
        raise ValueError(f"vector has dimension {len(v)}, expected {ctx.k - 1}")


# -- small steps ---------------------------------------------------------


def small_steps_decomposition(ctx: KBonacciContext, v: VecZ) -> Decomposition:
    """Express v as nonnegative multiples of X_{-1}..X_{-k}.

    With m the most negative entry (if any), take |m| copies of X_{-k} (the
    all-minus-ones vector) and v_i - m copies of each basis vector e_i;
    without negative entries simply take v_i copies of e_i.
    """
    _check_dim(ctx, v)
    vt = _require_nonzero(v, "small_steps_decomposition")
    k = ctx.k
    vm = min(vt)
    terms: list[int] = []
    if vm < 0:
        for i, comp in enumerate(vt, start=1):
            terms.extend([i] * (comp - vm))
        terms.extend([k] * (-vm))
    else:
        for i, comp in enumerate(vt, start=1):
            terms.extend([i] * comp)
    ctx.tick(2 * k)
    return Decomposition(tuple(sorted(terms)), "small_steps")


def small_steps_bound(ctx: KBonacciContext, v: VecZ) -> JBound:
    """Index bound implied by the small-steps decomposition.

    Negative case: j = |m| k + sum_i (v_i - m) k with m = min entry.
    Nonnegative case: j = k * sum_i v_i - 1.
    """
    _check_dim(ctx, v)
    vt = _require_nonzero(v, "small_steps_bound")
    k = ctx.k
    vm = min(vt)
    if vm < 0:
        j = (-vm) * k + sum(comp - vm for comp in vt) * k
    else:
        j = k * sum(vt) - 1
    ctx.tick(2 * k)
    return JBound(j, "small_steps")


# -- large steps ---------------------------------------------------------


def _closest_depth(ctx: KBonacciContext, v: tuple[int, ...], v_sq: int) -> tuple[int, int]:
    """Depth i >= 1 minimizing ||v - X_{-i}||^2 exactly, smallest depth on ties.

    Only candidates with ||X_{-i}||^2 <= 4 ||v||^2 can improve the norm
    (anything farther out is at distance > ||v|| by the triangle inequality),
    so the scan stops once the norm cap has been exceeded for a stretch of
    consecutive depths longer than any small-depth oscillation.
    """
    k = ctx.k
    dim = k - 1
    limit = 4 * v_sq
    patience = 2 * k + 4
    best_depth = -1
    best_dist = -1
    over = 0
    depth = 1
    while over < patience:
        nsq = ctx.vector_norm_sq(depth)
        if nsq <= limit:
            over = 0
            vec = ctx.vector(depth)
            dist = 0
            for t in range(dim):
                d = v[t] - vec[t]
                dist += d * d
            ctx.tick(3 * dim)
            if best_dist < 0 or dist < best_dist:
                best_depth = depth
                best_dist = dist
        else:
            over += 1
        ctx.tick()
        depth += 1
    return best_depth, best_dist


def large_steps_decomposition(
    ctx: KBonacciContext, v: VecZ
) -> tuple[Decomposition, JBound]:
    """Nearest-vector descent with a small-steps tail.

    Repeatedly subtract the closest X_{-i} while that strictly shrinks the
    Euclidean norm; the leftover (often zero) is handed to the small-steps
    decomposition.  The bound is j = k (N - 1) + max depth over all N terms.
    """
    _check_dim(ctx, v)
    vt = _require_nonzero(v, "large_steps_decomposition")
    k = ctx.k
    dim = k - 1
    cur = vt
    cur_sq = sum(c * c for c in cur)
    steps: list[int] = []
    while cur_sq > 0:
        depth, dist = _closest_depth(ctx, cur, cur_sq)
        if dist >= cur_sq:
            break
        steps.append(depth)
        vec = ctx.vector(depth)
        cur = tuple(a - b for a, b in zip(cur, vec))
        cur_sq = dist
        ctx.tick(dim)
    if cur_sq > 0:
        steps.extend(small_steps_decomposition(ctx, cur).terms)
    terms = tuple(sorted(steps))
    bound = JBound(k * (len(terms) - 1) + max(terms), "large_steps")
    return Decomposition(terms, "large_steps"), bound


# -- projection greedy ---------------------------------------------------


def vector_greedy(ctx: KBonacciContext, v: VecZ, j: int) -> IndexSet:
    """Reconstruct the SR of v from the single residue S_{j+1}(v).

    The residue is decomposed by the scalar greedy into summands x_l with
    l >= 2, and each l maps back to index j+1-l.  The result is verified by
    re-evaluation; a mismatch means j was too small and raises
    :class:`JBoundTooSmall`.
    """
    _check_dim(ctx, v)
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    vt = tuple(v)
    residue = project_Sn(ctx, vt, j + 1)
    scalar_indices = greedy_decompose(ctx, residue)
    indices = tuple(sorted(j + 1 - l for l in scalar_indices))
    if not is_satisfying(indices, ctx.k) or evaluate_vector(ctx, indices) != vt:
        raise JBoundTooSmall(f"bound j = {j} is insufficient for v = {vt}")
    return indices


def find_sr_with_bound(
    ctx: KBonacciContext, v: VecZ, strategy: str = "small_steps"
) -> tuple[IndexSet, JBound | None]:
    """SR of v plus the index bound used, via the chosen bounding strategy."""
    _check_dim(ctx, v)
    vt = tuple(v)
    if not any(vt):
        return (), None
    if strategy in ("small", "small_steps"):
        bound = small_steps_bound(ctx, vt)
    elif strategy in ("large", "large_steps"):
        _, bound = large_steps_decomposition(ctx, vt)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    try:
        sr = vector_greedy(ctx, vt, bound.value)
    except JBoundTooSmall:
        # The decomposition bound guarantees j >= J(v) only.  The greedy
        # needs J(v) <= j - 1 because its deepest usable summand at level
        # j is index j - 1 (scalar index 1 is never produced), so a single
        # escalation always suffices.
        sr = vector_greedy(ctx, vt, bound.value + 1)
    return sr, bound


def find_sr(ctx: KBonacciContext, v: VecZ, strategy: str = "small_steps") -> IndexSet:
    """The unique SR of v (empty for the zero vector)."""
    return find_sr_with_bound(ctx, v, strategy)[0]


# -- carry normalization and the reference recursion ---------------------


def is_nsr(coeffs: Mapping[int, int], k: int) -> bool:
    """Near-satisfying predicate: coefficients in {0,1,2}, no k consecutive
    nonzero indices, and at most one maximal run containing a 2."""
    support = sorted(i for i, c in coeffs.items() if c)
    if any(coeffs[i] not in (1, 2) for i in support):
        return False
    runs_with_two = 0
    run_len = 0
    run_has_two = False
    prev = None
    for i in support + [None]:
        if prev is not None and (i is None or i != prev + 1):
            if run_len >= k:
                return False
            if run_has_two:
                runs_with_two += 1
            run_len = 0
            run_has_two = False
        if i is not None:
            run_len += 1
            if coeffs[i] == 2:
                run_has_two = True
        prev = i
    return runs_with_two <= 1


def _evaluate_coeffs(ctx: KBonacciContext, coeffs: Mapping[int, int]) -> VecZ:
    dim = ctx.k - 1
    acc = [0] * dim
    for i, c in coeffs.items():
        if c:
            vec = ctx.vector(i)
            for t in range(dim):
                acc[t] += c * vec[t]
    return tuple(acc)


def _find_run(support_map: dict[int, int], k: int) -> int | None:
    """Leftmost start of k consecutive indices that all carry coefficient >= 1."""
    run_len = 0
    prev = None
    for i in sorted(support_map):
        run_len = run_len + 1 if prev is not None and i == prev + 1 else 1
        if run_len >= k:
            return i - k + 1
        prev = i
    return None


def normalize(
    ctx: KBonacciContext,
    coeffs: Mapping[int, int],
    *,
    budget: int = 10**6,
    debug: bool = False,
) -> IndexSet:
    """Rewrite a nonnegative coefficient vector into the SR of its value.

    Two value-preserving rewrites are applied until the coefficients are
    0/1 with no k consecutive indices:

    * run reduction: indices i..i+k-1 all nonzero lose one unit each; for
      i >= 2 that unit reappears at i-1 (X_{-(i-1)} equals the run sum),
      and for i = 1 it vanishes (X_{-1} + ... + X_{-k} = 0).
    * split: a coefficient >= 2 at i trades one unit for single units at
      i+1..i+k (X_{-i} equals that block sum).

    Run reductions are preferred because they shrink the total coefficient
    mass; splits only fire when no full run exists.  Exceeding the rewrite
    budget raises :class:`NormalizationDiverged`.  With debug=True the value
    is re-evaluated after every rewrite.
    """
    k = ctx.k
    c: dict[int, int] = {}
    for i, n in coeffs.items():
        if n < 0:
            raise ValueError(f"coefficient at index {i} is negative")
        if i < 1:
            raise ValueError(f"index {i} is out of domain")
        if n:
            c[int(i)] = int(n)
    want = _evaluate_coeffs(ctx, c) if debug else None
    rewrites = 0
    while True:
        start = _find_run(c, k)
        if start is not None:
            for t in range(start, start + k):
                if c[t] == 1:
                    del c[t]
                else:
                    c[t] -= 1
            if start >= 2:
                c[start - 1] = c.get(start - 1, 0) + 1
        else:
            doubled = min((i for i, n in c.items() if n >= 2), default=None)
            if doubled is None:
                break
            c[doubled] -= 1
            for t in range(doubled + 1, doubled + k + 1):
                c[t] = c.get(t, 0) + 1
        rewrites += 1
        ctx.tick(k)
        if debug and _evaluate_coeffs(ctx, c) != want:
            raise AssertionError("rewrite changed the represented value")
        if rewrites > budget:
            raise NormalizationDiverged(
                f"no satisfying form within {budget} rewrites"
            )
    return tuple(sorted(c))


def reference_recursive_sr(ctx: KBonacciContext, v: VecZ) -> IndexSet:
    """SR via the unit-step recursion.

    Descend from v to the zero vector: subtract e_i at the lowest positive
    coordinate, or add the all-ones vector (i.e. subtract X_{-k}) when no
    coordinate is positive.  Replaying the recorded terms forward from the
    empty SR, normalizing after each addition, rebuilds the SR of v.
    """
    _check_dim(ctx, v)
    k = ctx.k
    moves: list[int] = []
    cur = list(v)
    while any(cur):
        pos = next((t for t, comp in enumerate(cur) if comp > 0), None)
        if pos is not None:
            cur[pos] -= 1
            moves.append(pos + 1)
        else:
            for t in range(k - 1):
                cur[t] += 1
            moves.append(k)
        ctx.tick(k)
    sr: IndexSet = ()
    for i in reversed(moves):
        c = dict.fromkeys(sr, 1)
        c[i] = c.get(i, 0) + 1
        sr = normalize(ctx, c)
    return sr


# -- brute-force oracle --------------------------------------------------


@lru_cache(maxsize=None)
def _sr_table(k: int, max_index: int) -> dict[VecZ, IndexSet]:
    """Vector -> IndexSet over every satisfying set with max index <= bound."""
    ctx = KBonacciContext(k)
    table: dict[VecZ, IndexSet] = {}
    for s in iter_satisfying_sets(k, max_index):
        v = evaluate_vector(ctx, s)
        other = table.get(v)
        if other is not None:
            raise MultipleFound(f"{other} and {s} both represent {v}")
        table[v] = s
    return table


def brute_force_sr(ctx: KBonacciContext, v: VecZ, max_index: int) -> IndexSet:
    """SR of v by exhaustive scan over index sets bounded by max_index.

    The scan is memoized per (k, max_index); the search space has size
    x_{max_index + 2}.  Raises :class:`NotFound` when v has no SR within
    the bound and :class:`MultipleFound` if uniqueness ever failed.
    """
    _check_dim(ctx, v)
    table = _sr_table(ctx.k, max_index)
    try:
        return table[tuple(v)]
    except KeyError:
        raise NotFound(
            f"no satisfying set with max index <= {max_index} represents {tuple(v)}"
        ) from None
