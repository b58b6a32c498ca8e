import logging
import math
from typing import Any

from mpmath import iv

from kempner_series._utils import (
    CompensatedSum,
    block_sum,
    get_settings,
    interval_precision,
    log_power,
    lower_float,
    upper_float,
)
from kempner_series._utils._summation import UNIT_ROUNDOFF
from kempner_series.census import interval_blocks, interval_count
from kempner_series.errors import (
    KempnerError,
    KempnerErrorCategory,
    KempnerErrorCode,
)
from kempner_series.schedule import (
    Schedule,
    factor_product,
    forbidden_at,
    in_m_set,
    max_m,
)

from .abscissa import abscissa, classify
from .certificate import divergence_certificate
from .types import EnclosureVerdict, SeriesEnclosure, Verdict

logger = logging.getLogger(__name__)

# Members are converted to float exactly, so they must stay below 2^53.
_EXACT_FLOAT_LIMIT = 2**53

# pow() error plus the correctly rounded block sum plus per-interval compensation.
_TERM_RELATIVE_ERROR = 6 * UNIT_ROUNDOFF


def _check_enumeration(schedule: Schedule, m_enumerated: int, max_enum: int) -> None:
    if schedule.g**m_enumerated > _EXACT_FLOAT_LIMIT:
        raise KempnerError(
            KempnerErrorCode.ENUMERATION_TOO_LARGE,
            "Enumeration too deep",
            f"members below {schedule.g}^{m_enumerated} do not convert to float exactly",
            KempnerErrorCategory.LIMIT,
        )
    total = sum(interval_count(schedule, m).count for m in range(1, m_enumerated + 1))
    if total > max_enum:
        raise KempnerError(
            KempnerErrorCode.ENUMERATION_TOO_LARGE,
            "Enumeration too large",
            f"depth {m_enumerated} visits {total} members, above the limit {max_enum} (KEMPNER_MAX_ENUM)",
            KempnerErrorCategory.LIMIT,
        )


def _float_overflow(sigma: float, what: str) -> KempnerError:
    return KempnerError(
        KempnerErrorCode.FLOAT_OVERFLOW,
        "Float overflow",
        f"{what} exceeds the float range at sigma={sigma!r}",
        KempnerErrorCategory.NUMERIC,
    )


def _enumerated_sum(
    schedule: Schedule, sigma: float, m_enumerated: int
) -> tuple[float, float, int]:
    """Sum of a^(-sigma) over members below g^m_enumerated.

    Returns:
        (value, absolute error bound, number of members visited)
    """
    exponent = -sigma
    total = CompensatedSum()
    visited = 0
    for m in range(1, m_enumerated + 1):
        if not in_m_set(schedule, m):
            continue
        interval_sum = CompensatedSum()
        for base, suffix in interval_blocks(schedule, m):
            try:
                interval_sum.add(
                    block_sum([float(base + s) ** exponent for s in suffix])
                )
            except OverflowError:
                raise _float_overflow(sigma, f"a term with {m} digits") from None
            visited += len(suffix)
        if not math.isfinite(interval_sum.value):
            raise _float_overflow(sigma, f"the sum over {m}-digit members")
        logger.debug("Interval m=%d contributes %.17g", m, interval_sum.value)
        total.add(interval_sum.value)
    error = total.error_bound(_TERM_RELATIVE_ERROR)
    if not (math.isfinite(total.value) and math.isfinite(total.value + error)):
        raise _float_overflow(sigma, "the enumerated partial sum")
    return total.value, error, visited


def _bracket(schedule: Schedule, sigma: float, m: int) -> tuple[Any, Any]:
    """count_m g^(-m sigma) and count_m g^(-(m-1) sigma), ordered low to high."""
    count = iv.mpf(interval_count(schedule, m).count)
    a = count * log_power(schedule.g, iv.mpf(-m) * sigma)
    b = count * log_power(schedule.g, iv.mpf(-(m - 1)) * sigma)
    return (a, b) if sigma >= 0 else (b, a)


def _tail_bound(schedule: Schedule, sigma: float, start: int) -> Any:
    """Upper bound on the terms of F_A(sigma) with more than `start` digits.

    Needs start >= preperiod length and sigma > 0. Every m-digit member is at
    least g^(m-1) and there are at most prod (g - |U_i|) of them; over one
    period the product of x_i = (g - |U_i|) / g^sigma is rho < 1, which
    closes the sum as a geometric series.
    """
    g = schedule.g
    scale = log_power(g, iv.mpf(sigma))
    ratios = [
        iv.mpf(g - forbidden_at(schedule, i).size) / scale
        for i in range(start, start + schedule.period_length)
    ]
    rho = iv.mpf(1)
    partial_products = iv.mpf(0)
    for x in ratios:
        rho *= x
        partial_products += rho
    if not rho.b < 1:
        raise KempnerError(
            KempnerErrorCode.TAIL_NOT_CLOSABLE,
            "Tail not closable",
            f"per-period ratio {float(rho.mid)!r} is not below 1 at sigma={sigma!r}; sigma is within float resolution of sigma_c",
            KempnerErrorCategory.NUMERIC,
        )
    leading = iv.mpf(factor_product(schedule, start)) * log_power(
        g, iv.mpf(-(start - 1)) * sigma
    )
    return leading * partial_products / (1 - rho)


def evaluate(
    schedule: Schedule,
    sigma: float,
    m_enumerated: int,
    m_counted: int,
    max_enum: int | None = None,
    precision: int | None = None,
) -> SeriesEnclosure:
    """Enclose F_A(sigma) = sum over a in A of a^(-sigma).

    Members with at most m_enumerated digits are summed exactly (compensated);
    intervals up to m_counted digits are bracketed with their exact counts;
    beyond that a geometric tail closes the bound when sigma > sigma_c.

    Args:
        schedule: The forbidden-digit schedule.
        sigma: Real exponent.
        m_enumerated: Depth of explicit summation.
        m_counted: Depth of count-based bracketing, >= m_enumerated.
        max_enum: Member cap for the explicit summation (KEMPNER_MAX_ENUM).
        precision: Interval arithmetic precision in bits (KEMPNER_INTERVAL_PREC).

    Raises:
        KempnerError: ENUMERATION_TOO_LARGE, TAIL_NOT_CLOSABLE, FLOAT_OVERFLOW
            or INVALID_ARGUMENT.
    """
    if m_enumerated < 0 or m_counted < m_enumerated:
        raise KempnerError(
            KempnerErrorCode.INVALID_ARGUMENT,
            "Invalid depths",
            f"need 0 <= m_enumerated <= m_counted, got {m_enumerated} and {m_counted}",
        )
    settings = get_settings()
    _check_enumeration(
        schedule, m_enumerated, max_enum if max_enum is not None else settings.max_enum
    )
    bits = precision if precision is not None else settings.interval_precision

    sigma_c = abscissa(schedule).value
    classification = classify(schedule, sigma)
    if classification.critical:
        logger.warning(
            "sigma=%r is within float resolution of sigma_c=%r", sigma, sigma_c
        )

    last_m = max_m(schedule)
    if last_m is None:
        m_counted = max(m_counted, schedule.preperiod_length)
    else:
        m_counted = max(m_counted, last_m)

    partial, error, visited = _enumerated_sum(schedule, sigma, m_enumerated)

    with interval_precision(bits):
        enumerated = iv.mpf(
            [
                math.nextafter(partial - error, -math.inf),
                math.nextafter(partial + error, math.inf),
            ]
        )
        bracket_low = iv.mpf(0)
        bracket_high = iv.mpf(0)
        for m in range(m_enumerated + 1, m_counted + 1):
            if in_m_set(schedule, m):
                low, high = _bracket(schedule, sigma, m)
                bracket_low += low
                bracket_high += high

        lower_bound = max(0.0, lower_float(enumerated))
        counted_lower_bound = max(0.0, lower_float(enumerated + bracket_low))
        if math.isinf(upper_float(enumerated + bracket_low)):
            raise _float_overflow(sigma, "the counted lower bound")
        upper_bound: float | None = None
        tail_upper: float | None = None
        certificate = None

        if classification.verdict == Verdict.POLYNOMIAL:
            verdict = EnclosureVerdict.POLYNOMIAL
            upper_bound = upper_float(enumerated + bracket_high)
            if math.isinf(upper_bound):
                raise _float_overflow(sigma, "the counted upper bound")
        elif classification.verdict == Verdict.DIVERGES:
            verdict = EnclosureVerdict.DIVERGENT_CERTIFIED
            certificate = divergence_certificate(
                schedule, sigma, max(m_counted, 1), precision=bits
            )
        else:
            verdict = EnclosureVerdict.CONVERGENT_ENCLOSED
            tail = _tail_bound(schedule, sigma, m_counted)
            tail_upper = upper_float(tail)
            upper_bound = upper_float(enumerated + bracket_high + tail)
            logger.info("Tail beyond m=%d bounded by %.17g", m_counted, tail_upper)

    return SeriesEnclosure(
        sigma=sigma,
        sigma_c=sigma_c,
        verdict=verdict,
        m_enumerated=m_enumerated,
        m_counted=m_counted,
        terms_enumerated=visited,
        partial_sum=partial,
        lower_bound=lower_bound,
        counted_lower_bound=counted_lower_bound,
        upper_bound=upper_bound,
        tail_upper=tail_upper,
        certificate=certificate,
    )
