"""Outward-rounded interval helpers on top of `mpmath.iv`."""

import math
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from fractions import Fraction
from typing import Any

from mpmath import iv


@contextmanager
def interval_precision(bits: int) -> Iterator[None]:
    """Temporarily raise the working precision of `mpmath.iv`."""
    previous = iv.prec
    iv.prec = max(previous, bits)
    try:
        yield
    finally:
        iv.prec = previous


def to_interval(value: int | float | Fraction) -> Any:
    if isinstance(value, Fraction):
        return iv.mpf(value.numerator) / value.denominator
    return iv.mpf(value)


def lower_float(x: Any) -> float:
    """Largest float not above the lower endpoint of `x`."""
    a = float(x.a)
    if a == math.inf:
        return sys.float_info.max
    if a == -math.inf:
        return a
    return math.nextafter(a, -math.inf)


def upper_float(x: Any) -> float:
    """Smallest float not below the upper endpoint of `x`."""
    b = float(x.b)
    if math.isinf(b):
        return b
    return math.nextafter(b, math.inf)


def log_power(base: int, exponent: Any) -> Any:
    """Interval enclosure of base**exponent for an integer base >= 1."""
    if base == 1:
        return iv.mpf(1)
    return iv.exp(exponent * iv.log(base))
