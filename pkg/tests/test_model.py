from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epirules import (
    EpisodeRule,
    MiningConfigError,
    MiningParams,
    contains_subsequence,
    occurrence_span,
    rule_confidence,
)
from epirules.model import check_occurrence

events = st.lists(st.integers(min_value=0, max_value=5), max_size=8)


class TestContainsSubsequence:
    def test_embedding(self):
        assert contains_subsequence((3, 5, 6), (3, 6))

    def test_order_matters(self):
        assert not contains_subsequence((8, 7), (7, 8))

    def test_empty_pattern(self):
        assert contains_subsequence((1,), ())

    @given(events)
    def test_reflexive(self, xs):
        assert contains_subsequence(xs, xs)

    @given(events, events, events)
    def test_transitive(self, a, b, c):
        if contains_subsequence(a, b) and contains_subsequence(b, c):
            assert contains_subsequence(a, c)

    @given(events, events)
    def test_antisymmetric(self, a, b):
        if contains_subsequence(a, b) and contains_subsequence(b, a):
            assert a == b


class TestRuleConfidence:
    def test_third(self):
        assert rule_confidence(1, 3) == Fraction(1, 3)

    def test_zero_support(self):
        assert rule_confidence(0, 5) == 0

    def test_half(self):
        assert rule_confidence(2, 4) == Fraction(1, 2)

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            rule_confidence(1, 0)


class TestOccurrenceSpan:
    def test_three(self):
        assert occurrence_span((3, 5, 6)) == 3

    def test_single(self):
        assert occurrence_span((7,)) == 0

    def test_pair(self):
        assert occurrence_span((9, 11)) == 2

    def test_strictly_increasing_enforced(self):
        with pytest.raises(ValueError):
            check_occurrence((3, 3))
        assert check_occurrence((3, 5)) == (3, 5)


class TestEpisodeRule:
    def test_fixed_gap_identity_includes_gaps(self):
        a = EpisodeRule((1,), 1, (2, 3), (1,), 1, Fraction(1))
        b = EpisodeRule((1,), 1, (2, 3), (2,), 1, Fraction(1))
        assert a.key != b.key

    def test_invalid_gap_count(self):
        with pytest.raises(ValueError):
            EpisodeRule((1,), 1, (2, 3), (), 1, Fraction(1))

    def test_invalid_elapse(self):
        with pytest.raises(ValueError):
            EpisodeRule((1,), 0, (2,), (), 1, Fraction(1))


class TestMiningParams:
    def test_valid(self):
        MiningParams((1, 2), 1, Fraction(1, 2), 2, 4).validate()

    def test_epsilon_too_small_for_query(self):
        with pytest.raises(MiningConfigError):
            MiningParams((1, 2, 3), 1, Fraction(1, 2), 2, 2).validate()

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"query": ()},
            {"min_sup": 0},
            {"min_conf": Fraction(0)},
            {"min_conf": Fraction(3, 2)},
            {"delta": 0},
            {"epsilon": 0},
            {"strategies": 5},
        ],
    )
    def test_invalid(self, kwargs):
        base = dict(query=(1,), min_sup=1, min_conf=Fraction(1, 2), delta=2, epsilon=4)
        base.update(kwargs)
        with pytest.raises(MiningConfigError):
            MiningParams(**base).validate()
