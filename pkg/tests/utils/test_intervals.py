import math
import sys
from fractions import Fraction

from mpmath import iv

from kempner_series._utils import (
    interval_precision,
    log_power,
    lower_float,
    to_interval,
    upper_float,
)


class TestOutwardConversion:
    def test_brackets_a_third(self):
        third = to_interval(Fraction(1, 3))
        assert lower_float(third) < 1 / 3 < upper_float(third)

    def test_exact_endpoint_still_moves_outward(self):
        one = iv.mpf(1)
        assert lower_float(one) < 1.0 < upper_float(one)

    def test_overflowing_lower_endpoint(self):
        huge = iv.mpf(10) ** 400
        assert lower_float(huge) == sys.float_info.max
        assert upper_float(huge) == math.inf


class TestIntervalPrecision:
    def test_restores_precision(self):
        before = iv.prec
        with interval_precision(200):
            assert iv.prec == 200
        assert iv.prec == before

    def test_never_lowers_precision(self):
        before = iv.prec
        with interval_precision(10):
            assert iv.prec == before


def test_log_power_encloses_the_power():
    with interval_precision(113):
        value = log_power(10, iv.mpf(2))
    assert lower_float(value) <= 100.0 <= upper_float(value)
    one = log_power(1, iv.mpf(-7))
    assert float(one.a) == float(one.b) == 1.0
