"""Summand minimality: SRs use as few summands as any repetition-allowed
combination of k-bonacci vectors."""

import json

import pytest

from veczeck import KBonacciContext, find_sr, verify_layer_minimality
from veczeck.minimality import vector_min_summands_bounded
from veczeck.representations import iter_satisfying_sets
from veczeck.representations import evaluate_vector


@pytest.fixture(scope="module")
def ctx():
    return KBonacciContext(3)


def test_min_summand_examples(ctx):
    assert vector_min_summands_bounded(ctx, (0, 0), 10, 5) == 0
    assert vector_min_summands_bounded(ctx, (2, 0), 10, 5) == 1   # X_{-4}
    assert vector_min_summands_bounded(ctx, (7, 0), 12, 6) == 4
    # inconclusive when the budget stops short of the answer
    assert vector_min_summands_bounded(ctx, (7, 0), 12, 3) is None


def test_min_summands_with_tight_index_cap(ctx):
    # restricted to depths {1,2,3}, (2,-2) needs the small-steps multiset
    assert vector_min_summands_bounded(ctx, (2, -2), 3, 8) == 6


def test_layer_report_fields(ctx):
    report = verify_layer_minimality(ctx, 6, 10)
    assert report.k == 3
    assert report.layer == 6
    assert report.bound == 10
    assert report.vectors_checked == 20
    assert report.counterexamples == []
    assert json.loads(report.to_json()) == {
        "layer": 6,
        "bound": 10,
        "vectors_checked": 20,
        "counterexamples": [],
    }


@pytest.mark.parametrize("k,n,bound", [(3, 7, 11), (4, 4, 9)])
def test_small_layers_are_minimal(k, n, bound):
    ctx = KBonacciContext(k)
    report = verify_layer_minimality(ctx, n, bound)
    assert report.counterexamples == []
    assert report.vectors_checked > 0


def test_sr_length_is_attained_exactly(ctx):
    # the bounded search finds the SR size but nothing smaller
    for s in iter_satisfying_sets(3, 6):
        v = evaluate_vector(ctx, s)
        sr = find_sr(ctx, v)
        assert vector_min_summands_bounded(ctx, v, 10, len(sr)) == len(sr)
        if sr:
            assert vector_min_summands_bounded(ctx, v, 10, len(sr) - 1) is None
