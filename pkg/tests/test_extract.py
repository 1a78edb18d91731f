import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzysumm.errors import InvalidRate
from fuzzysumm.extract import (
    Summary,
    baseline_summary,
    rank,
    render_summary,
    select_by_budget,
    select_sentences,
    summary_size,
)
from fuzzysumm.scoring import Method, ScoredSentence

from conftest import make_doc


def scored(values, method=Method.GSM):
    return [ScoredSentence(i, v, method) for i, v in enumerate(values)]


def test_typical_news_length():
    assert summary_size(28, 0.2) == 6
    assert len(select_sentences(scored(range(28)), 0.2).selected_indices) == 6


def test_sizes():
    for n in range(1, 61):
        assert summary_size(n, 0.2) == max(1, math.ceil(n / 5))
    assert summary_size(3, 0.2) == 1
    assert summary_size(15, 0.2) == 3
    assert summary_size(10, 1.0) == 10


@pytest.mark.parametrize("rate", [0.0, -0.1, 1.5, float("nan")])
def test_invalid_rate(rate):
    with pytest.raises(InvalidRate):
        select_sentences(scored([1, 2]), rate)


def test_tie_break_by_index():
    s = select_sentences(scored([5, 5, 3]), 0.34)
    assert s.selected_indices == (0, 1)
    s = select_sentences(scored([1, 3, 3, 3]), 0.25)
    assert s.selected_indices == (1,)


def test_document_order_output():
    s = select_sentences(scored([1, 9, 2, 8, 7]), 0.6)
    assert s.selected_indices == (1, 3, 4)


def test_permutation_safety():
    rng = random.Random(0)
    for _ in range(200):
        values = [rng.choice([1.0, 2.0, 3.0]) for _ in range(rng.randint(1, 20))]
        items = scored(values)
        rate = rng.choice([0.2, 0.3, 0.5])
        want = select_sentences(items, rate).selected_indices
        rng.shuffle(items)
        assert select_sentences(items, rate).selected_indices == want


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=40), st.floats(0.01, 1.0))
def test_dominance_and_size(values, rate):
    s = select_sentences(scored(values), rate)
    chosen = set(s.selected_indices)
    assert len(chosen) == summary_size(len(values), rate)
    for i in chosen:
        for j in set(range(len(values))) - chosen:
            assert values[i] > values[j] or (values[i] == values[j] and i < j)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(0, 8), min_size=1, max_size=40), st.floats(0.01, 1.0), st.floats(0.01, 1.0))
def test_rate_monotone(values, r1, r2):
    lo, hi = sorted((r1, r2))
    small = set(select_sentences(scored(values), lo).selected_indices)
    big = set(select_sentences(scored(values), hi).selected_indices)
    assert small <= big


def test_rank():
    r = rank(scored([2, 3, 2]))
    assert [s.sentence_index for s in r] == [1, 0, 2]


def test_budget():
    s = select_by_budget(scored([3, 2, 1, 0]), [4, 5, 2, 1], 9)
    assert s.selected_indices == (0, 1)
    # stops at the first overflow even if a later, shorter sentence would fit
    s = select_by_budget(scored([3, 2, 1, 0]), [4, 10, 1, 1], 9)
    assert s.selected_indices == (0,)
    # always at least one
    s = select_by_budget(scored([3, 2]), [50, 1], 10)
    assert s.selected_indices == (0,)
    assert s.word_budget == 10 and s.compression_rate is None


def test_summary_invariant():
    with pytest.raises(ValueError):
        Summary("d", Method.GSM, (2, 1))
    with pytest.raises(ValueError):
        Summary("d", Method.GSM, (1, 1))


def test_render():
    doc = make_doc("First one here. Second one here. Third one here.")
    assert render_summary(Summary("d", Method.GSM, (1,)), doc) == "Second one here."
    assert render_summary(Summary("d", Method.GSM, (0, 2)), doc) == "First one here. Third one here."
    with pytest.raises(IndexError):
        render_summary(Summary("d", Method.GSM, (3,)), doc)


def test_baseline():
    body = " ".join(f"Sentence {k} has exactly six words." for k in range(30))
    doc = make_doc(body, doc_id="lead")
    s = baseline_summary(doc)
    assert len(s.text.split()) == 100
    assert s.text.split() == body.split()[:100]
    assert s.selected_indices == tuple(range(17))
    assert s.method is Method.BASELINE
    short = baseline_summary(make_doc("Only five words are here."))
    assert short.text == "Only five words are here."
