import math
from fractions import Fraction

import pytest

from kempner_series import (
    KempnerError,
    KempnerErrorCode,
    Schedule,
    Verdict,
    abscissa,
    build_schedule,
    classify,
    constant_schedule,
    corollary_abscissa,
    critical_ratio,
    empirical_abscissa,
    in_m_set,
    m_set_prefix,
)
from tests.conftest import CORPUS, corpus_schedule

KEMPNER_SIGMA_C = math.log(9) / math.log(10)

INFINITE_CORPUS = sorted(n for n in CORPUS if corpus_schedule(n).m_set_infinite)


def _product_ratio(schedule: Schedule, sigma: float) -> float:
    g = schedule.g
    weight = math.prod(
        math.pow(g - k, float(a)) for k, a in enumerate(schedule.alpha) if a
    )
    return weight / math.pow(g, sigma)


def _deviation_bound(schedule: Schedule, m: int) -> float:
    g = schedule.g
    largest_log = max(math.log(g - k) for k in range(g))
    return (g * schedule.beta * largest_log + math.log(g)) / (m * math.log(g))


class TestAbscissa:
    """Tests for the abscissa of convergence."""

    def test_kempner(self, kempner):
        report = abscissa(kempner)
        assert report.value == pytest.approx(KEMPNER_SIGMA_C, abs=1e-12)
        assert report.value == pytest.approx(0.954242509439325, abs=1e-12)
        assert report.diverges_at_sigma_c is True
        assert report.polynomial is False
        assert report.symbolic == "(1/1*log(9))/log(10)"

    def test_unrestricted(self):
        assert abscissa(constant_schedule(10)).value == 1.0

    def test_alternating(self, alternating):
        report = abscissa(alternating)
        assert report.value == pytest.approx(0.977121254719662, abs=1e-12)
        assert [(t.alpha, t.base) for t in report.terms] == [
            (Fraction(1, 2), 10),
            (Fraction(1, 2), 9),
        ]

    def test_one_member_per_interval(self):
        report = abscissa(constant_schedule(2, [0]))
        assert report.value == 0.0
        assert report.m_set_infinite is True

    def test_empty_set_is_polynomial(self, empty_set):
        report = abscissa(empty_set)
        assert report.polynomial is True
        assert report.diverges_at_sigma_c is False

    def test_terms_serialize_as_ratios(self, alternating):
        dumped = abscissa(alternating).model_dump(mode="json")
        assert dumped["terms"][0] == {"alpha": "1/2", "base": 10}

    @pytest.mark.parametrize("g", range(2, 17))
    def test_single_digit_exclusions(self, g):
        for u in range(g):
            schedule = constant_schedule(g, [u])
            if not schedule.m_set_infinite:
                continue
            assert abscissa(schedule).value == pytest.approx(
                corollary_abscissa(g), abs=1e-12
            )

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_ratio_matches_digit_product(self, name):
        schedule = corpus_schedule(name)
        sigma_c = abscissa(schedule).value
        for sigma in (sigma_c, sigma_c - 0.25, sigma_c + 0.25):
            assert critical_ratio(schedule, sigma) == pytest.approx(
                _product_ratio(schedule, sigma), rel=1e-12
            )
        assert _product_ratio(schedule, sigma_c) == pytest.approx(1.0, rel=1e-12)

    def test_ratio_either_side(self, kempner):
        assert critical_ratio(kempner, KEMPNER_SIGMA_C - 0.1) > 1
        assert critical_ratio(kempner, KEMPNER_SIGMA_C + 0.1) < 1


class TestEmpiricalAbscissa:
    @pytest.mark.parametrize("m", [1, 2, 10, 100, 1000])
    def test_exact_without_leading_correction(self, m):
        schedule = constant_schedule(10, [0])
        assert empirical_abscissa(schedule, m) == pytest.approx(
            KEMPNER_SIGMA_C, abs=1e-14
        )

    @pytest.mark.parametrize("m", [10, 100, 1000])
    def test_kempner_error_term(self, kempner, m):
        error = empirical_abscissa(kempner, m) - KEMPNER_SIGMA_C
        assert error == pytest.approx(math.log(8 / 9) / (m * math.log(10)), abs=1e-13)
        assert abs(error) <= math.log(9 / 8) / (m * math.log(10)) + 1e-13

    def test_kempner_increases_toward_abscissa(self, kempner):
        estimates = [empirical_abscissa(kempner, m) for m in (10, 100, 1000)]
        assert estimates[0] < estimates[1] < estimates[2] < KEMPNER_SIGMA_C

    @pytest.mark.parametrize("name", INFINITE_CORPUS)
    def test_within_deviation_bound(self, name):
        schedule = corpus_schedule(name)
        sigma_c = abscissa(schedule).value
        lengths = m_set_prefix(schedule, 60) + [
            m for m in (100, 500, 1000, 2000) if in_m_set(schedule, m)
        ]
        assert lengths
        for m in lengths:
            error = abs(empirical_abscissa(schedule, m) - sigma_c)
            assert error <= _deviation_bound(schedule, m) + 1e-12

    def test_alternating_converges(self, alternating):
        sigma_c = abscissa(alternating).value
        assert abs(empirical_abscissa(alternating, 2000) - sigma_c) <= (
            _deviation_bound(alternating, 2000)
        )

    def test_empty_interval(self, empty_set):
        with pytest.raises(KempnerError) as exc_info:
            empirical_abscissa(empty_set, 4)
        assert exc_info.value.code == KempnerErrorCode.EMPTY_INTERVAL


class TestClassify:
    def test_kempner_converges_at_one(self, kempner):
        result = classify(kempner, 1.0)
        assert result.verdict == Verdict.CONVERGES
        assert result.critical is False

    def test_kempner_diverges_at_the_abscissa(self, kempner):
        result = classify(kempner, KEMPNER_SIGMA_C)
        assert result.verdict == Verdict.DIVERGES
        assert result.critical is True

    def test_below_abscissa(self, kempner):
        assert classify(kempner, 0.5).verdict == Verdict.DIVERGES

    def test_empty_set(self, empty_set):
        assert classify(empty_set, -5).verdict == Verdict.POLYNOMIAL

    def test_finite_m_set(self):
        schedule = build_schedule(3, [[], []], [[1, 2]])
        assert classify(schedule, 0.0).verdict == Verdict.POLYNOMIAL

    @pytest.mark.parametrize("g", [2, 10, 64])
    def test_harmonic_series_diverges(self, g):
        result = classify(constant_schedule(g), 1.0)
        assert result.verdict == Verdict.DIVERGES
        assert result.critical is True
