import logging
import math
from typing import Any

from mpmath import iv

from kempner_series._utils import (
    get_settings,
    interval_precision,
    lower_float,
    to_interval,
    upper_float,
)
from kempner_series.census import interval_count
from kempner_series.errors import (
    KempnerError,
    KempnerErrorCategory,
    KempnerErrorCode,
)
from kempner_series.schedule import Schedule, m_set_prefix

from .abscissa import CRITICAL_TOLERANCE, abscissa, critical_ratio
from .types import DivergenceCertificate

logger = logging.getLogger(__name__)


def _critical_log_weight(schedule: Schedule) -> Any:
    """Interval enclosure of sum alpha_k log(g - k) = sigma_c log g."""
    total = iv.mpf(0)
    for k, a in enumerate(schedule.alpha):
        if a and schedule.g - k > 1:
            total += to_interval(a) * iv.log(schedule.g - k)
    return total


def divergence_certificate(
    schedule: Schedule,
    sigma: float | None = None,
    m_max: int = 100,
    precision: int | None = None,
) -> DivergenceCertificate:
    """Rigorous lower bound on sum over m in M of |A intersected with I_m| / g^(m sigma).

    Each member a of I_m satisfies a < g^m, so the bound sits below the
    partial sums of F_A(sigma). At sigma = sigma_c every term is at least
    1 / (2 g^(g beta)), hence the bound grows at least linearly in the number
    of m in M up to m_max, which certifies divergence.

    Args:
        schedule: The forbidden-digit schedule (M must be infinite).
        sigma: Exponent at or below sigma_c; None evaluates the exact critical
            line through g^(m sigma_c) = prod (g - k)^(alpha_k m).
        m_max: Largest digit length included.
        precision: Interval arithmetic precision in bits (KEMPNER_INTERVAL_PREC).

    Raises:
        KempnerError: M_SET_FINITE, SIGMA_ABOVE_CRITICAL, INVALID_ARGUMENT or
            FLOAT_OVERFLOW.
    """
    if not schedule.m_set_infinite:
        raise KempnerError(
            KempnerErrorCode.M_SET_FINITE,
            "Dirichlet polynomial",
            "M is finite, so F_A is entire and has no divergence to certify",
        )
    if m_max < 1:
        raise KempnerError(
            KempnerErrorCode.INVALID_ARGUMENT,
            "Invalid depth",
            f"m_max must be >= 1, got {m_max}",
        )
    sigma_c = abscissa(schedule).value
    if sigma is not None and sigma > sigma_c + CRITICAL_TOLERANCE:
        raise KempnerError(
            KempnerErrorCode.SIGMA_ABOVE_CRITICAL,
            "Sigma above the abscissa",
            f"sigma={sigma!r} exceeds sigma_c={sigma_c!r}; F_A(sigma) converges there",
        )

    g = schedule.g
    exact_critical = sigma is None
    reported_sigma = sigma_c if sigma is None else sigma
    ratio = critical_ratio(schedule, reported_sigma)
    bits = precision if precision is not None else get_settings().interval_precision
    m_range = m_set_prefix(schedule, m_max)

    with interval_precision(bits):
        if sigma is None:
            log_scale = _critical_log_weight(schedule)
            log_ratio = iv.mpf(0)
        else:
            log_scale = iv.mpf(sigma) * iv.log(g)
            log_ratio = _critical_log_weight(schedule) - log_scale

        certified = iv.mpf(0)
        for m in m_range:
            count = interval_count(schedule, m).count
            certified += iv.mpf(count) / iv.exp(m * log_scale)

        template_constant = 1 / (2 * iv.mpf(g) ** (g * schedule.beta))
        template = iv.mpf(0)
        for m in m_range:
            template += template_constant * iv.exp(m * log_ratio)

        dominates = bool(certified.a >= template.b)
        template_sum = upper_float(template)
        if math.isinf(template_sum) or math.isinf(ratio):
            raise KempnerError(
                KempnerErrorCode.FLOAT_OVERFLOW,
                "Float overflow",
                f"the ratio or template sum up to m={m_max} exceeds the float range at sigma={reported_sigma!r}",
                KempnerErrorCategory.NUMERIC,
            )
        certificate = DivergenceCertificate(
            sigma=reported_sigma,
            sigma_c=sigma_c,
            exact_critical=exact_critical,
            ratio=ratio,
            template_constant=max(0.0, lower_float(template_constant)),
            m_range=m_range,
            certified_sum_lower=max(0.0, lower_float(certified)),
            template_sum_lower=template_sum,
            dominates=dominates,
        )

    logger.info(
        "Divergence certificate over %d lengths: lower bound %.17g (template %.17g)",
        len(m_range),
        certificate.certified_sum_lower,
        certificate.template_sum_lower,
    )
    return certificate
