
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzysumm.errors import EmptyInput, MissingFile
from fuzzysumm.rouge import (
    BINS,
    RougeConfig,
    bin_label,
    evaluate_corpus,
    histogram,
    rouge_1,
    rouge_tokens,
    summarize_scores,
)

WORDS = st.lists(st.sampled_from("the a cat dog sat ran fast slow red".split()), min_size=1, max_size=15)


def test_cat_example():
    s = rouge_1("the cat sat", ["the cat ran fast"])
    assert (s.match_count, s.candidate_count, s.reference_count) == (2, 3, 4)
    assert s.precision == 2 / 3 and s.recall == 1 / 2
    assert s.f_measure == pytest.approx(4 / 7, abs=1e-15)


def test_identity_and_disjoint():
    s = rouge_1("Rain fell on Monday.", "rain fell on monday")
    assert (s.precision, s.recall, s.f_measure) == (1.0, 1.0, 1.0)
    s = rouge_1("alpha beta", "gamma delta")
    assert (s.precision, s.recall, s.f_measure) == (0.0, 0.0, 0.0)


def test_tokens():
    assert rouge_tokens("The U.S.-led, 45% rise!") == ["the", "u", "s", "led", "45", "rise"]
    assert rouge_tokens("Floods flooding", use_stem=True) == ["flood", "flood"]


def test_stem_option():
    assert rouge_1("floods", "flooding").f_measure == 0.0
    assert rouge_1("floods", "flooding", RougeConfig(stem=True)).f_measure == 1.0


def test_clipping():
    a = rouge_1("cat", "the cat sat")
    b = rouge_1("cat cat cat", "the cat sat")
    assert a.match_count == b.match_count == 1
    assert b.candidate_count == 3


def test_empty():
    with pytest.raises(EmptyInput):
        rouge_1("", "x")
    with pytest.raises(EmptyInput):
        rouge_1("x", ["", "..."])


def test_multi_reference():
    refs = ["the cat", "the dog sat on a mat"]
    best = rouge_1("the cat sat", refs)
    assert best.recall == 1.0  # first reference
    avg = rouge_1("the cat sat", refs, RougeConfig(multi_reference="average"))
    assert avg.recall == pytest.approx((1.0 + 2 / 6) / 2)
    assert avg.precision == pytest.approx((2 / 3 + 2 / 3) / 2)
    with pytest.raises(ValueError):
        RougeConfig(multi_reference="min")


@given(WORDS, WORDS, st.randoms())
def test_shuffle_invariance(cand, ref, rnd):
    base = rouge_1(" ".join(cand), " ".join(ref))
    cand2, ref2 = list(cand), list(ref)
    rnd.shuffle(cand2)
    rnd.shuffle(ref2)
    assert rouge_1(" ".join(cand2), " ".join(ref2)) == base


@given(WORDS, WORDS)
def test_swap_symmetry(cand, ref):
    a = rouge_1(" ".join(cand), " ".join(ref))
    b = rouge_1(" ".join(ref), " ".join(cand))
    assert (a.precision, a.recall) == (b.recall, b.precision)
    assert a.match_count <= min(a.candidate_count, a.reference_count)
    if a.precision + a.recall:
        assert abs(a.f_measure - 2 * a.precision * a.recall / (a.precision + a.recall)) <= 1e-12


@pytest.mark.parametrize(
    "f, label",
    [(0.0, "<0.3"), (0.2999, "<0.3"), (0.3, "0.3-0.4"), (0.4, "0.4-0.5"), (0.5, "0.5-0.6"),
     (0.6, "0.6-0.7"), (0.6999, "0.6-0.7"), (0.7, ">=0.7"), (1.0, ">=0.7")],
)
def test_bins(f, label):
    assert bin_label(f) == label


def test_histogram_two_docs():
    from fuzzysumm.rouge import RougeScore

    rep = summarize_scores({"a": RougeScore(0.35, 0.35, 0.35), "b": RougeScore(0.45, 0.45, 0.45)})
    assert rep.f_measure == pytest.approx(0.40)
    assert rep.histogram["0.3-0.4"] == 1 and rep.histogram["0.4-0.5"] == 1
    assert sum(rep.histogram.values()) == 2
    assert list(histogram([])) == [b[0] for b in BINS]


def test_evaluate_corpus(tmp_path):
    cand = tmp_path / "d1.gsm.sum.txt"
    cand.write_text("the cat sat\n")
    ref = tmp_path / "r1.txt"
    ref.write_text("the cat sat")
    rep = evaluate_corpus([(cand, [ref])])
    assert (rep.precision, rep.recall, rep.f_measure) == (1.0, 1.0, 1.0)
    assert rep.histogram[">=0.7"] == 1
    assert list(rep.per_document) == ["d1"]
    with pytest.raises(MissingFile) as info:
        evaluate_corpus([(cand, [tmp_path / "nope.txt"])])
    assert "nope.txt" in str(info.value)
    with pytest.raises(EmptyInput):
        evaluate_corpus([])
