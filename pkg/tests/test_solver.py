"""Decomposition strategies, the greedy reconstruction, normalization,
the reference recursion, and the brute-force oracle."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from veczeck import (
    JBoundTooSmall,
    KBonacciContext,
    NormalizationDiverged,
    NotFound,
    ZeroVector,
    brute_force_sr,
    evaluate_vector,
    find_sr,
    find_sr_with_bound,
    is_nsr,
    is_satisfying,
    large_steps_decomposition,
    max_index_J,
    normalize,
    reference_recursive_sr,
    small_steps_bound,
    small_steps_decomposition,
    vector_greedy,
)


@pytest.fixture(scope="module")
def ctx():
    return KBonacciContext(3)


# -- small steps ---------------------------------------------------------


def test_small_steps_negative_case(ctx):
    dec = small_steps_decomposition(ctx, (2, -2))
    assert dec.terms == (1, 1, 1, 1, 3, 3)
    assert dec.evaluate(ctx) == (2, -2)
    assert small_steps_bound(ctx, (2, -2)).value == 18


def test_small_steps_nonnegative_case(ctx):
    dec = small_steps_decomposition(ctx, (3, 0))
    assert dec.terms == (1, 1, 1)
    assert dec.evaluate(ctx) == (3, 0)
    assert small_steps_bound(ctx, (3, 0)).value == 8


def test_small_steps_rejects_zero(ctx):
    with pytest.raises(ZeroVector):
        small_steps_decomposition(ctx, (0, 0))
    with pytest.raises(ZeroVector):
        small_steps_bound(ctx, (0, 0))


def test_small_steps_bound_formula_spot_values(ctx):
    assert small_steps_bound(ctx, (1, 0)).value == 2
    assert small_steps_bound(ctx, (0, 1)).value == 2
    assert small_steps_bound(ctx, (-1, 0)).value == 6
    ctx4 = KBonacciContext(4)
    # nonnegative: k * sum - 1
    assert small_steps_bound(ctx4, (1, 1, 1)).value == 11


# -- large steps ---------------------------------------------------------


def test_large_steps_worked_examples(ctx):
    dec, bound = large_steps_decomposition(ctx, (2, -2))
    assert dec.terms == (1, 1, 3, 3, 4)
    assert dec.evaluate(ctx) == (2, -2)
    assert bound.value == 16
    dec, bound = large_steps_decomposition(ctx, (3, 0))
    assert dec.terms == (1, 4)
    assert bound.value == 7


def test_large_steps_stops_on_small_negatives(ctx):
    # no step strictly decreases the norm, so the whole vector falls
    # through to the small-steps tail
    dec, bound = large_steps_decomposition(ctx, (-1, 0))
    assert dec.terms == (2, 3)
    assert bound.value == 6
    dec, bound = large_steps_decomposition(ctx, (0, -1))
    assert dec.terms == (1, 3)
    assert bound.value == 6


def test_large_steps_decomposition_evaluates_back(ctx):
    for v in [(5, 3), (-7, 2), (40, -40), (0, 17), (-100, -100)]:
        dec, bound = large_steps_decomposition(ctx, v)
        assert dec.evaluate(ctx) == v
        assert bound.value == 3 * (len(dec.terms) - 1) + max(dec.terms)


# -- greedy reconstruction ----------------------------------------------


def test_vector_greedy_worked_examples(ctx):
    assert vector_greedy(ctx, (2, -2), 18) == (2, 3, 6, 7)
    assert vector_greedy(ctx, (2, -2), 16) == (2, 3, 6, 7)
    assert vector_greedy(ctx, (3, 0), 8) == (1, 4)


def test_vector_greedy_needs_j_above_J(ctx):
    # (2,0) = X_{-4}; the greedy at level j only reaches index j-1
    with pytest.raises(JBoundTooSmall):
        vector_greedy(ctx, (2, 0), 4)
    assert vector_greedy(ctx, (2, 0), 5) == (4,)


def test_find_sr_escalates_once_when_bound_is_tight(ctx):
    # j_lsb((1,0)) = 1 = J, one level short for the greedy
    sr, bound = find_sr_with_bound(ctx, (1, 0), "large")
    assert sr == (1,)
    assert bound.value == 1


def test_find_sr_worked_examples(ctx):
    assert find_sr(ctx, (7, 0), "small") == (1, 3, 4, 7)
    assert find_sr(ctx, (7, 0), "large") == (1, 3, 4, 7)
    assert find_sr(ctx, (2, -2), "small") == (2, 3, 6, 7)
    assert find_sr(ctx, (0, 0)) == ()
    with pytest.raises(ValueError):
        find_sr(ctx, (1, 1), "fancy")


def test_find_sr_zero_vector_has_no_bound(ctx):
    sr, bound = find_sr_with_bound(ctx, (0, 0), "small")
    assert sr == () and bound is None


# -- normalization -------------------------------------------------------


def test_normalize_worked_examples(ctx):
    assert normalize(ctx, {1: 1, 2: 1, 3: 1}) == ()
    assert normalize(ctx, {4: 1, 5: 1, 6: 1}) == (3,)
    assert normalize(ctx, {1: 2}) == (4,)


def test_normalize_fixes_nothing_on_an_sr(ctx):
    assert normalize(ctx, {2: 1, 3: 1, 6: 1, 7: 1}) == (2, 3, 6, 7)
    assert normalize(ctx, {}) == ()


def test_normalize_agrees_with_solver(ctx):
    coeffs = {1: 2, 3: 1, 4: 1, 7: 1}
    value = evaluate_vector(ctx, (1, 1, 3, 4, 7))
    assert normalize(ctx, coeffs, debug=True) == find_sr(ctx, value)


def test_normalize_budget_abort(ctx):
    with pytest.raises(NormalizationDiverged):
        normalize(ctx, {1: 2}, budget=1)


@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.dictionaries(
        st.integers(min_value=1, max_value=14),
        st.integers(min_value=1, max_value=3),
        max_size=8,
    ),
    k=st.integers(min_value=3, max_value=5),
)
def test_normalize_terminates_and_preserves_value(coeffs, k):
    ctx = KBonacciContext(k)
    dim = k - 1
    value = tuple(
        sum(c * ctx.vector(i)[d] for i, c in coeffs.items()) for d in range(dim)
    )
    out = normalize(ctx, dict(coeffs), debug=True)
    assert is_satisfying(out, k)
    assert evaluate_vector(ctx, out) == value


def test_is_nsr_cases():
    assert is_nsr({}, 3)
    assert is_nsr({1: 1, 3: 2}, 3)
    assert is_nsr({2: 2, 3: 1, 5: 1}, 3)
    assert not is_nsr({1: 2, 4: 2}, 3)       # two runs carry a 2
    assert not is_nsr({1: 3}, 3)             # coefficient out of range
    assert not is_nsr({1: 1, 2: 1, 3: 1}, 3)  # full run of k
    assert is_nsr({1: 1, 2: 1, 3: 1}, 4)


# -- reference recursion and brute force ---------------------------------


def test_reference_recursive_examples(ctx):
    assert reference_recursive_sr(ctx, (7, 0)) == (1, 3, 4, 7)
    assert reference_recursive_sr(ctx, (0, 0)) == ()
    assert reference_recursive_sr(ctx, (0, -1)) == (1, 3)


def test_brute_force_examples(ctx):
    assert brute_force_sr(ctx, (7, 0), 12) == (1, 3, 4, 7)
    assert brute_force_sr(ctx, (0, 0), 8) == ()
    with pytest.raises(NotFound):
        brute_force_sr(ctx, (100, 100), 6)


def test_brute_force_k4(ctx):
    ctx4 = KBonacciContext(4)
    sr = brute_force_sr(ctx4, (1, 1, 1), 12)
    assert find_sr(ctx4, (1, 1, 1)) == sr
    assert evaluate_vector(ctx4, sr) == (1, 1, 1)


def test_all_strategies_agree_on_a_small_box(ctx):
    for v in itertools.product(range(-4, 5), repeat=2):
        expected = brute_force_sr(ctx, v, 14)
        assert find_sr(ctx, v, "small") == expected
        assert find_sr(ctx, v, "large") == expected
        assert reference_recursive_sr(ctx, v) == expected


def test_adding_one_summand_bounds_the_new_max_index(ctx):
    # if J(v) <= M and p <= M then J(v + X_{-p}) <= k + M
    from veczeck.representations import iter_satisfying_sets

    M = 8
    for s in iter_satisfying_sets(3, M):
        v = evaluate_vector(ctx, s)
        for p in (1, M // 2, M):
            w = tuple(a + b for a, b in zip(v, ctx.vector(p)))
            assert max_index_J(find_sr(ctx, w)) <= 3 + M


def test_bounds_dominate_J_on_random_box(ctx):
    import random

    rng = random.Random(11)
    for _ in range(150):
        v = (rng.randint(-50, 50), rng.randint(-50, 50))
        if v == (0, 0):
            continue
        J = max_index_J(find_sr(ctx, v))
        assert small_steps_bound(ctx, v).value >= J
        assert large_steps_decomposition(ctx, v)[1].value >= J


@settings(max_examples=80, deadline=None)
@given(
    v=st.tuples(st.integers(min_value=-60, max_value=60),
                st.integers(min_value=-60, max_value=60))
)
def test_strategy_agreement_property(v):
    ctx = KBonacciContext(3)
    small = find_sr(ctx, v, "small")
    assert evaluate_vector(ctx, small) == v
    assert find_sr(ctx, v, "large") == small
    assert reference_recursive_sr(ctx, v) == small


@settings(max_examples=40, deadline=None)
@given(
    v=st.tuples(st.integers(min_value=-15, max_value=15),
                st.integers(min_value=-15, max_value=15),
                st.integers(min_value=-15, max_value=15))
)
def test_strategy_agreement_property_k4(v):
    ctx = KBonacciContext(4)
    small = find_sr(ctx, v, "small")
    assert evaluate_vector(ctx, small) == v
    assert find_sr(ctx, v, "large") == small
    assert reference_recursive_sr(ctx, v) == small
