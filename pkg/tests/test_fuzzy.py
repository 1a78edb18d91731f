import pickle
from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzysumm.errors import (
    ConflictingRules,
    MissingInput,
    OutOfUniverse,
    RuleSyntaxError,
    UnknownTerm,
    UnknownVariable,
)
from fuzzysumm.fuzzy import (
    INPUT_NAMES,
    AggregatedCurve,
    FuzzyRule,
    FuzzySystem,
    LinguisticVariable,
    RuleBase,
    TriangularMF,
    default_input_variables,
    default_output_variable,
    default_system,
    defuzzify_centroid,
    five_term_partition,
    mf_eval,
)
from fuzzysumm.rules import format_rules, parse_rules

from oracles import trapezoid_centroid

LABELS = ("VL", "L", "M", "H", "VH")
OUT_LABELS = ("Unimportant", "Average", "Important")


def parse(text):
    return parse_rules(text, default_input_variables(), default_output_variable())


def system(text, **kw):
    return FuzzySystem(default_input_variables(), default_output_variable(), parse(text), **kw)


class TestMembership:
    def test_examples(self):
        m = TriangularMF(0.25, 0.5, 0.75)
        assert mf_eval(m, 0.5) == 1.0
        assert mf_eval(m, 0.375) == 0.5
        assert mf_eval(TriangularMF(0.75, 1.0, 1.0), 1.0) == 1.0

    def test_outside_support(self):
        m = TriangularMF(0.25, 0.5, 0.75)
        assert mf_eval(m, 0.1) == 0.0 and mf_eval(m, 0.9) == 0.0
        assert mf_eval(m, 0.25) == 0.0 and mf_eval(m, 0.75) == 0.0

    def test_shoulders(self):
        left = TriangularMF(0.0, 0.0, 0.25)
        assert mf_eval(left, 0.0) == 1.0
        assert mf_eval(left, 0.125) == 0.5
        assert mf_eval(left, 0.25) == 0.0
        assert mf_eval(left, -0.1) == 0.0
        right = TriangularMF(0.75, 1.0, 1.0)
        assert mf_eval(right, 0.875) == 0.5
        assert mf_eval(right, 1.1) == 0.0

    @pytest.mark.parametrize("abc", [(0.5, 0.2, 0.9), (0.3, 0.3, 0.3), (0.1, 0.9, 0.5)])
    def test_invalid(self, abc):
        with pytest.raises(ValueError):
            TriangularMF(*abc)

    def test_fuzzify(self):
        var = five_term_partition("f")
        assert var.fuzzify(0.5) == {"VL": 0, "L": 0, "M": 1, "H": 0, "VH": 0}
        assert var.fuzzify(0.625) == {"VL": 0, "L": 0, "M": 0.5, "H": 0.5, "VH": 0}
        assert var.fuzzify(0.0) == {"VL": 1, "L": 0, "M": 0, "H": 0, "VH": 0}

    def test_fuzzify_range_check(self):
        var = five_term_partition("f")
        assert var.fuzzify(1.0 + 1e-12)["VH"] == 1.0
        with pytest.raises(OutOfUniverse):
            var.fuzzify(1.5)
        with pytest.raises(OutOfUniverse):
            var.fuzzify(float("nan"))

    def test_partition_of_unity(self):
        var = five_term_partition("f")
        for i in range(10_001):
            assert abs(sum(var.fuzzify(i / 10_000).values()) - 1.0) <= 1e-12

    def test_coverage_gap_rejected(self):
        with pytest.raises(ValueError):
            LinguisticVariable("g", (("lo", TriangularMF(0, 0, 0.3)), ("hi", TriangularMF(0.5, 1, 1))))
        with pytest.raises(ValueError):
            LinguisticVariable("g", (("a", TriangularMF(0, 0.5, 1)),))
        with pytest.raises(ValueError):
            LinguisticVariable("g", (("a", TriangularMF(0, 0, 1)), ("A", TriangularMF(0, 1, 1))))


class TestParser:
    def test_simple(self):
        rb = parse("IF f1 is VH AND f4 is H THEN importance is Important")
        assert len(rb) == 1
        rule = rb.rules[0]
        assert rule.antecedents == (("f1_title", "VH"), ("f4_position", "H"))
        assert rule.consequent == "Important" and rule.weight == 1.0

    def test_unknown_term(self):
        with pytest.raises(UnknownTerm) as info:
            parse("IF f1 is XXL THEN importance is Important")
        assert "line 1, column 10" in str(info.value)

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse("IF f9 is H THEN importance is Important")
        with pytest.raises(UnknownVariable):
            parse("IF f1 is H THEN f2 is H")

    def test_sample_rule(self):
        text = (
            "IF (NoWordInTitle is VH) and (SentenceLength is H) and (TermFreq is VH) and "
            "(SentencePosition is H) and (SentenceSimilarity is VH) and (NoProperNoun is H) and "
            "(NoThematicWord is VH) and (NumericalData is H) THEN (Sentence is important)"
        )
        rule = parse(text).rules[0]
        assert [v for v, _ in rule.antecedents] == list(INPUT_NAMES)
        assert [l for _, l in rule.antecedents] == ["VH", "H", "VH", "H", "VH", "H", "VH", "H"]
        assert rule.consequent == "Important"

    def test_multiline_comments_weight(self):
        rb = parse("# header\nIF f2 is L\n  AND f3 is VL  # tail\nTHEN importance is Unimportant WITH 0.5\n\n"
                   "if F4_POSITION is vh then IMPORTANCE is important\n")
        assert len(rb) == 2
        assert rb.rules[0].weight == 0.5
        assert rb.rules[1].antecedents == (("f4_position", "VH"),)

    @pytest.mark.parametrize(
        "text, line, col",
        [
            ("IF f1 is H THEN importance", 1, 27),
            ("IF f1 is H\nTHEN importance is Important\nIF f2 H THEN importance is Average", 3, 7),
            ("IF f1 is H THEN importance is Important WITH 1.5", 1, 46),
            ("IF f1 is H AND f1 is M THEN importance is Important", 1, 16),
            ("IF f1 is H THEN importance is Important ;", 1, 41),
            ("IF (f1 is H THEN importance is Important", 1, 13),
        ],
    )
    def test_syntax_error_location(self, text, line, col):
        with pytest.raises(RuleSyntaxError) as info:
            parse(text)
        assert (info.value.line, info.value.column) == (line, col)

    def test_empty(self):
        with pytest.raises(RuleSyntaxError):
            parse("# nothing\n")

    def test_conflict(self):
        with pytest.raises(ConflictingRules) as info:
            parse("IF f1 is H THEN importance is Important\n\nIF f1 is H THEN importance is Average")
        assert "lines 1 and 3" in str(info.value)

    def test_duplicate_same_consequent_allowed(self):
        assert len(parse("IF f1 is H THEN importance is Important\nIF f1 is h THEN importance is important")) == 2

    def test_round_trip_default(self):
        rb = default_system().rules
        assert parse(format_rules(rb)) == rb

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_round_trip_random(self, data):
        rb = data.draw(rule_bases())
        assert parse(format_rules(rb)) == rb


@st.composite
def rule_bases(draw):
    n = draw(st.integers(1, 8))
    rules = {}
    for _ in range(n):
        names = draw(st.lists(st.sampled_from(INPUT_NAMES), min_size=1, max_size=8, unique=True))
        names.sort(key=INPUT_NAMES.index)
        ante = tuple((v, draw(st.sampled_from(LABELS))) for v in names)
        cons = draw(st.sampled_from(OUT_LABELS))
        weight = draw(st.sampled_from([1.0, 0.5, 0.25, 0.9, 0.123]))
        rules.setdefault(frozenset(ante), FuzzyRule(ante, cons, weight))
    return RuleBase(tuple(rules.values()))


class TestInference:
    def test_no_rule_fires(self):
        sys_ = system("IF f1 is VH THEN importance is Important")
        curve = sys_.infer([0.0] * 8)
        assert curve.activations == (0.0, 0.0, 0.0)
        assert all(m == 0.0 for m in curve.sample(101))
        assert sys_.evaluate([0.0] * 8) == 0.5

    def test_single_rule_clips(self):
        sys_ = system("IF f1 is H THEN importance is Important")
        x = 0.5 + 0.7 * 0.25
        curve = sys_.infer([x] + [0.0] * 7)
        act = curve.activation("Important")
        assert act == pytest.approx(0.7, abs=1e-12)
        important = TriangularMF(0.5, 1.0, 1.0)
        for i in range(101):
            y = i / 100
            assert curve(y) == min(act, mf_eval(important, y))

    def test_two_rule_micro_example(self):
        # a=0.625 -> H 0.5; b=0.3 -> M 0.2
        sys_ = system("IF f1 is H THEN importance is Important\nIF f2 is M THEN importance is Unimportant")
        curve = sys_.infer({"f1": 0.625, "f2": 0.3, "f3": 0, "f4": 0, "f5": 0, "f6": 0, "f7": 0, "f8": 0})
        assert curve.sample(11) == pytest.approx(
            [0.2, 0.2, 0.2, 0.2, 0.2, 0.0, 0.2, 0.4, 0.5, 0.5, 0.5], abs=1e-12)
        assert sys_.firing_strengths([0.625, 0.3] + [0] * 6) == pytest.approx([0.5, 0.2], abs=1e-12)

    def test_weights_scale_firing(self):
        sys_ = system("IF f1 is VH THEN importance is Important WITH 0.5")
        assert sys_.firing_strengths([1.0] + [0] * 7) == [0.5]

    def test_missing_input(self):
        sys_ = default_system()
        with pytest.raises(MissingInput):
            sys_.evaluate({"f1": 0.3})
        with pytest.raises(MissingInput):
            sys_.evaluate([0.2] * 7)
        with pytest.raises(OutOfUniverse):
            sys_.evaluate([2.0] * 8)

    def test_mapping_and_sequence_agree(self):
        sys_ = default_system()
        vec = [0.9, 0.8, 1.0, 0.8, 0.7, 0.3, 0.9, 0.1]
        assert sys_.evaluate(vec) == sys_.evaluate(dict(zip(INPUT_NAMES, vec)))

    def test_evaluate_many_matches_evaluate(self):
        sys_ = default_system()
        rng = random.Random(4)
        vecs = [[rng.random() for _ in range(8)] for _ in range(50)]
        vecs += [[1.0] * 8, [0.0] * 8, [0.5] * 8]
        assert sys_.evaluate_many(vecs) == [sys_.evaluate(v) for v in vecs]
        assert sys_.evaluate_many([]) == []

    def test_pickle(self):
        sys_ = default_system()
        clone = pickle.loads(pickle.dumps(sys_))
        assert clone.evaluate([0.7] * 8) == sys_.evaluate([0.7] * 8)

    def test_resolution_floor(self):
        with pytest.raises(ValueError):
            system("IF f1 is H THEN importance is Important", resolution=50)


class TestDefuzzify:
    def test_symmetric(self):
        out = default_output_variable()
        assert defuzzify_centroid(AggregatedCurve(out, (0.0, 0.6, 0.0))) == pytest.approx(0.5, abs=1e-9)
        assert defuzzify_centroid(AggregatedCurve(out, (0.3, 0.0, 0.3))) == pytest.approx(0.5, abs=1e-9)

    def test_important_alone(self):
        out = default_output_variable()
        c = defuzzify_centroid(AggregatedCurve(out, (0.0, 0.0, 1.0)), resolution=10_001)
        assert c == pytest.approx((0.5 + 1.0 + 1.0) / 3, abs=1e-3)

    def test_all_zero_fallback(self):
        out = default_output_variable()
        assert defuzzify_centroid(AggregatedCurve(out, (0.0, 0.0, 0.0))) == 0.5
        assert defuzzify_centroid([0.0] * 11) == 0.5
        assert defuzzify_centroid(lambda y: 0.0, fallback=0.25) == 0.25

    def test_callable_and_sequence_forms(self):
        out = default_output_variable()
        curve = AggregatedCurve(out, (0.2, 0.7, 0.4))
        a = defuzzify_centroid(curve)
        assert defuzzify_centroid(lambda y: curve(y)) == pytest.approx(a, abs=1e-12)
        assert defuzzify_centroid(curve.sample(1001)) == pytest.approx(a, abs=1e-12)

    def test_centroid_within_support(self):
        out = default_output_variable()
        rng = random.Random(1)
        for _ in range(100):
            k = rng.randrange(3)
            act = [0.0, 0.0, 0.0]
            act[k] = rng.uniform(0.01, 1.0)
            mf = out.terms[k][1]
            c = defuzzify_centroid(AggregatedCurve(out, tuple(act)))
            assert mf.a <= c <= mf.c

    def test_convergence(self):
        out = default_output_variable()
        rng = random.Random(2)
        for _ in range(30):
            curve = AggregatedCurve(out, tuple(rng.random() for _ in range(3)))
            assert abs(defuzzify_centroid(curve, 1001) - defuzzify_centroid(curve, 100_001)) <= 1e-3

    def test_against_trapezoid(self):
        out = default_output_variable()
        rng = random.Random(3)
        for _ in range(10):
            curve = AggregatedCurve(out, tuple(rng.random() for _ in range(3)))
            assert abs(defuzzify_centroid(curve) - trapezoid_centroid(curve, points=20_001)) <= 1e-3


class TestProperties:
    @settings(max_examples=80, deadline=None)
    @given(st.data())
    def test_output_range(self, data):
        rb = data.draw(rule_bases())
        sys_ = FuzzySystem(default_input_variables(), default_output_variable(), rb, resolution=201)
        x = data.draw(st.lists(st.floats(0.0, 1.0), min_size=8, max_size=8))
        assert 0.0 <= sys_.evaluate(x) <= 1.0

    def test_monotone_clipping(self):
        sys_ = system("IF f1 is H THEN importance is Important\nIF f2 is VH THEN importance is Important")
        base = [0.0] * 8
        base[1] = 0.9  # second rule fires at 0.6
        prev = -1.0
        for i in range(26):
            x = 0.5 + i * 0.01
            act = sys_.infer([x] + base[1:]).activation("Important")
            assert act >= prev
            prev = act

    def test_default_extremes(self):
        sys_ = default_system()
        hi = sys_.evaluate([1.0] * 8)
        lo = sys_.evaluate([0.0] * 8)
        assert hi >= 0.75 and lo <= 0.25
        # only the Important (resp. Unimportant) term fires at full strength;
        # exact sampled centroid of (0.5, 1, 1) on the 1001-point grid
        ys = [Fraction(i, 1000) for i in range(500, 1001)]
        exact = sum(y * (2 * y - 1) for y in ys) / sum(2 * y - 1 for y in ys)
        assert exact == Fraction(2501, 3000)
        assert hi == pytest.approx(float(exact), abs=1e-12)
        assert lo == pytest.approx(float(1 - exact), abs=1e-12)
        assert sys_.evaluate([0.5] * 8) == pytest.approx(0.5, abs=1e-12)

    def test_default_rules_file(self):
        sys_ = default_system()
        assert len(sys_.rules) == 36
        labels = {r.consequent for r in sys_.rules}
        assert labels == set(OUT_LABELS)
