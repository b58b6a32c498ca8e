import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import floor, prod

from kempner_series.errors import (
    KempnerError,
    KempnerErrorCategory,
    KempnerErrorCode,
)

from .types import MAX_RADIX, DigitSet, Schedule

logger = logging.getLogger(__name__)

DigitSetLike = DigitSet | Iterable[int]


def _as_digit_set(value: DigitSetLike, g: int, position: str) -> DigitSet:
    raw = list(value.digits) if isinstance(value, DigitSet) else list(value)
    for digit in raw:
        if isinstance(digit, bool) or not isinstance(digit, int):
            raise KempnerError(
                KempnerErrorCode.DIGIT_OUT_OF_RANGE,
                "Invalid digit",
                f"{position} contains non-integer digit {digit!r}",
            )
        if not 0 <= digit < g:
            raise KempnerError(
                KempnerErrorCode.DIGIT_OUT_OF_RANGE,
                "Digit out of range",
                f"{position} forbids digit {digit}, outside [0, {g - 1}]",
            )
    digits = DigitSet.of(raw)
    if digits.size == g:
        raise KempnerError(
            KempnerErrorCode.IMPROPER_DIGIT_SET,
            "Improper digit set",
            f"{position} forbids every digit of [0, {g - 1}]; forbidden sets must be proper subsets",
        )
    return digits


def _size_profile(g: int, digit_sets: Iterable[DigitSet]) -> tuple[int, ...]:
    counts = [0] * g
    for digits in digit_sets:
        counts[digits.size] += 1
    return tuple(counts)


def _max_deviation(
    preperiod: Sequence[DigitSet],
    period: Sequence[DigitSet],
    alpha: Sequence[Fraction],
) -> Fraction:
    """max |profile_k(m) - alpha_k m| over m = 1 .. preperiod + period.

    For m past the preperiod the deviation repeats with the period length,
    so this window covers every m >= 1.
    """
    counts = [0] * len(alpha)
    worst = Fraction(0)
    positions = list(preperiod) + list(period)
    for m, digits in enumerate(positions, start=1):
        counts[digits.size] += 1
        for k, a in enumerate(alpha):
            worst = max(worst, abs(counts[k] - a * m))
    return worst


def build_schedule(
    g: int,
    preperiod: Sequence[DigitSetLike],
    period: Sequence[DigitSetLike],
) -> Schedule:
    """Validate a forbidden-digit schedule and derive alpha, beta and the M-set flag.

    Args:
        g: Radix, 2 <= g <= 64.
        preperiod: Forbidden sets U_0 .. U_{p-1}.
        period: Forbidden sets repeated forever after the preperiod.

    Returns:
        The validated, immutable schedule.

    Raises:
        KempnerError: RADIX_TOO_SMALL, RADIX_TOO_LARGE, EMPTY_PERIOD,
            DIGIT_OUT_OF_RANGE or IMPROPER_DIGIT_SET.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise KempnerError(
            KempnerErrorCode.RADIX_TOO_SMALL,
            "Radix too small",
            f"radix must be an integer >= 2, got {g!r}",
        )
    if g > MAX_RADIX:
        raise KempnerError(
            KempnerErrorCode.RADIX_TOO_LARGE,
            "Radix too large",
            f"radix {g} exceeds the supported maximum {MAX_RADIX}",
            KempnerErrorCategory.LIMIT,
        )
    if len(period) == 0:
        raise KempnerError(
            KempnerErrorCode.EMPTY_PERIOD,
            "Empty period",
            "the periodic part of a schedule needs at least one digit set",
        )

    pre = tuple(
        _as_digit_set(u, g, f"preperiod[{i}]") for i, u in enumerate(preperiod)
    )
    per = tuple(_as_digit_set(u, g, f"period[{i}]") for i, u in enumerate(period))

    period_profile = _size_profile(g, per)
    alpha = tuple(Fraction(count, len(per)) for count in period_profile)
    beta = floor(_max_deviation(pre, per, alpha)) + 1
    m_set_infinite = any(not u.blocks_interval(g) for u in per)

    schedule = Schedule(
        g=g,
        preperiod=pre,
        period=per,
        preperiod_profile=_size_profile(g, pre),
        period_profile=period_profile,
        alpha=alpha,
        beta=beta,
        m_set_infinite=m_set_infinite,
    )
    logger.debug(
        "Built schedule g=%d preperiod=%d period=%d alpha=%s beta=%d",
        g,
        len(pre),
        len(per),
        [str(a) for a in alpha],
        beta,
    )
    return schedule


def constant_schedule(g: int, forbidden: DigitSetLike = ()) -> Schedule:
    """Schedule with the same forbidden set at every position."""
    return build_schedule(g, [], [forbidden])


def forbidden_at(schedule: Schedule, i: int) -> DigitSet:
    """Forbidden set U_i at position i (0 = least significant digit)."""
    if i < 0:
        raise KempnerError(
            KempnerErrorCode.INVALID_ARGUMENT,
            "Negative position",
            f"digit positions start at 0, got {i}",
        )
    p = schedule.preperiod_length
    if i < p:
        return schedule.preperiod[i]
    return schedule.period[(i - p) % schedule.period_length]


def _profile(schedule: Schedule, m: int) -> list[int]:
    """Digit profile over the first m positions; m = 0 gives all zeros."""
    p = schedule.preperiod_length
    if m <= p:
        return list(_size_profile(schedule.g, schedule.preperiod[:m]))

    full_periods, partial = divmod(m - p, schedule.period_length)
    partial_profile = _size_profile(schedule.g, schedule.period[:partial])
    return [
        pre + full_periods * per + part
        for pre, per, part in zip(
            schedule.preperiod_profile,
            schedule.period_profile,
            partial_profile,
            strict=True,
        )
    ]


def digit_profile(schedule: Schedule, m: int) -> list[int]:
    """Entry k counts positions i in [0, m-1] with |U_i| = k."""
    if m < 1:
        raise KempnerError(
            KempnerErrorCode.INVALID_ARGUMENT,
            "Invalid digit length",
            f"m must be >= 1, got {m}",
        )
    return _profile(schedule, m)


def epsilon_bound(schedule: Schedule) -> int:
    """Integer beta with |digit_profile(m)[k] - alpha_k m| < beta for all m, k."""
    return schedule.beta


def factor_product(schedule: Schedule, m: int) -> int:
    """Exact product of (g - |U_i|) over i in [0, m-1]."""
    g = schedule.g
    return prod((g - k) ** count for k, count in enumerate(_profile(schedule, m)))


def in_m_set(schedule: Schedule, m: int) -> bool:
    """True when the interval of m-digit numbers contains a member."""
    if m < 1:
        return False
    return not forbidden_at(schedule, m - 1).blocks_interval(schedule.g)


def m_set_prefix(schedule: Schedule, m_max: int) -> list[int]:
    return [m for m in range(1, m_max + 1) if in_m_set(schedule, m)]


def max_m(schedule: Schedule) -> int | None:
    """Largest element of M, 0 when M is empty, None when M is infinite."""
    if schedule.m_set_infinite:
        return None
    members = m_set_prefix(schedule, schedule.preperiod_length)
    return members[-1] if members else 0
