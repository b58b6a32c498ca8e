from fractions import Fraction

import pytest
from hypothesis import given

from kempner_series import (
    DigitSet,
    KempnerError,
    KempnerErrorCategory,
    KempnerErrorCode,
    build_schedule,
    constant_schedule,
    digit_profile,
    epsilon_bound,
    factor_product,
    forbidden_at,
    in_m_set,
    m_set_prefix,
    max_m,
)
from tests.conftest import CORPUS, corpus_schedule
from tests.strategies import schedules


class TestBuildSchedule:
    """Tests for build_schedule and its derived fields."""

    def test_kempner_frequencies(self):
        schedule = constant_schedule(10, [9])
        assert schedule.alpha[1] == 1
        assert all(a == 0 for k, a in enumerate(schedule.alpha) if k != 1)
        assert schedule.m_set_infinite is True

    def test_unrestricted(self):
        schedule = constant_schedule(10)
        assert schedule.alpha[0] == 1
        assert schedule.m_set_infinite is True

    def test_mixed_period_frequencies(self, alternating):
        assert alternating.alpha[0] == Fraction(1, 2)
        assert alternating.alpha[1] == Fraction(1, 2)
        assert sum(alternating.alpha) == 1

    def test_full_digit_set_is_improper(self):
        with pytest.raises(KempnerError) as exc_info:
            build_schedule(10, [], [list(range(10))])
        assert exc_info.value.code == KempnerErrorCode.IMPROPER_DIGIT_SET
        assert str(exc_info.value).startswith("[KEMPNER.IMPROPER_DIGIT_SET]")

    @pytest.mark.parametrize("g", [0, 1, -3])
    def test_radix_too_small(self, g):
        with pytest.raises(KempnerError) as exc_info:
            build_schedule(g, [], [[]])
        assert exc_info.value.code == KempnerErrorCode.RADIX_TOO_SMALL

    def test_radix_too_large(self):
        with pytest.raises(KempnerError) as exc_info:
            build_schedule(65, [], [[]])
        assert exc_info.value.code == KempnerErrorCode.RADIX_TOO_LARGE
        assert exc_info.value.category == KempnerErrorCategory.LIMIT

    def test_empty_period(self):
        with pytest.raises(KempnerError) as exc_info:
            build_schedule(10, [[1]], [])
        assert exc_info.value.code == KempnerErrorCode.EMPTY_PERIOD

    @pytest.mark.parametrize("digits", [[10], [-1], [3, 12]])
    def test_digit_out_of_range(self, digits):
        with pytest.raises(KempnerError) as exc_info:
            build_schedule(10, [digits], [[9]])
        assert exc_info.value.code == KempnerErrorCode.DIGIT_OUT_OF_RANGE
        assert "preperiod[0]" in exc_info.value.detail

    def test_accepts_digit_sets(self):
        schedule = build_schedule(10, [DigitSet.of([1])], [DigitSet.of([9, 0])])
        assert forbidden_at(schedule, 1).sorted_digits == [0, 9]

    def test_schedule_is_immutable(self, kempner):
        with pytest.raises(Exception):
            kempner.g = 9

    def test_error_info(self):
        with pytest.raises(KempnerError) as exc_info:
            build_schedule(10, [], [])
        info = exc_info.value.error_info
        assert info["code"] == "KEMPNER.EMPTY_PERIOD"
        assert info["category"] == "User"


class TestForbiddenAt:
    def test_preperiod_lookup(self):
        schedule = build_schedule(10, [[1]], [[2], [3]])
        assert forbidden_at(schedule, 0).sorted_digits == [1]

    def test_period_wraps(self):
        schedule = build_schedule(10, [[1]], [[2], [3]])
        assert forbidden_at(schedule, 1).sorted_digits == [2]
        assert forbidden_at(schedule, 4).sorted_digits == [3]

    def test_far_position(self, kempner):
        assert forbidden_at(kempner, 10**6).sorted_digits == [9]

    def test_negative_position(self, kempner):
        with pytest.raises(KempnerError) as exc_info:
            forbidden_at(kempner, -1)
        assert exc_info.value.code == KempnerErrorCode.INVALID_ARGUMENT


class TestDigitProfile:
    def test_kempner(self, kempner):
        assert digit_profile(kempner, 5) == [0, 5, 0, 0, 0, 0, 0, 0, 0, 0]

    def test_alternating(self, alternating):
        assert digit_profile(alternating, 5) == [2, 3, 0, 0, 0, 0, 0, 0, 0, 0]

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_single_position(self, name):
        schedule = corpus_schedule(name)
        profile = digit_profile(schedule, 1)
        assert sum(profile) == 1
        assert profile[forbidden_at(schedule, 0).size] == 1

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_matches_direct_scan(self, name):
        schedule = corpus_schedule(name)
        for m in (1, 2, 7, 23):
            expected = [0] * schedule.g
            for i in range(m):
                expected[forbidden_at(schedule, i).size] += 1
            assert digit_profile(schedule, m) == expected

    def test_rejects_zero_length(self, kempner):
        with pytest.raises(KempnerError) as exc_info:
            digit_profile(kempner, 0)
        assert exc_info.value.code == KempnerErrorCode.INVALID_ARGUMENT


class TestEpsilonBound:
    def test_constant_schedule(self, kempner):
        assert epsilon_bound(kempner) == 1

    def test_alternating(self, alternating):
        assert epsilon_bound(alternating) == 1

    def test_long_preperiod(self):
        schedule = build_schedule(10, [[], [], []], [[9]])
        assert epsilon_bound(schedule) == 4

    @given(schedules())
    def test_bounds_every_deviation(self, schedule):
        beta = epsilon_bound(schedule)
        span = 3 * (schedule.preperiod_length + schedule.period_length)
        for m in range(1, span + 1):
            for k, count in enumerate(digit_profile(schedule, m)):
                assert abs(count - schedule.alpha[k] * m) < beta


class TestMSet:
    def test_empty_set(self, empty_set):
        assert empty_set.m_set_infinite is False
        assert m_set_prefix(empty_set, 10) == []
        assert max_m(empty_set) == 0

    def test_finite(self):
        schedule = corpus_schedule("finite-3")
        assert schedule.m_set_infinite is False
        assert m_set_prefix(schedule, 10) == [1, 2]
        assert max_m(schedule) == 2

    def test_gap(self):
        schedule = corpus_schedule("gap-3")
        assert in_m_set(schedule, 1) is False
        assert in_m_set(schedule, 2) is True
        assert max_m(schedule) is None

    def test_infinite(self, kempner):
        assert m_set_prefix(kempner, 4) == [1, 2, 3, 4]
        assert max_m(kempner) is None


class TestFactorProduct:
    def test_kempner(self, kempner):
        assert factor_product(kempner, 0) == 1
        assert factor_product(kempner, 3) == 729

    def test_large_exponent(self, kempner):
        assert factor_product(kempner, 1000) == 9**1000

    def test_alternating(self, alternating):
        assert factor_product(alternating, 4) == 9 * 10 * 9 * 10
