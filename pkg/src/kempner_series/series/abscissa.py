import logging
import math

from kempner_series.census import log_count
from kempner_series.schedule import Schedule

from .types import AbscissaReport, AbscissaTerm, Classification, Verdict

logger = logging.getLogger(__name__)

CRITICAL_TOLERANCE = 1e-12


def _log_weight(schedule: Schedule) -> float:
    """Sum of alpha_k log(g - k), i.e. sigma_c * log g."""
    g = schedule.g
    return math.fsum(
        float(a) * math.log(g - k) for k, a in enumerate(schedule.alpha) if a
    )


def abscissa(schedule: Schedule) -> AbscissaReport:
    """Abscissa of convergence of F_A(s) = sum over a in A of a^(-s).

    Every supported schedule is eventually periodic, so the digit-frequency
    deviations stay bounded and F_A also diverges at sigma_c whenever M is
    infinite. With M finite F_A is a Dirichlet polynomial (entire); the value
    is still reported but flagged.
    """
    g = schedule.g
    terms = tuple(
        AbscissaTerm(alpha=a, base=g - k) for k, a in enumerate(schedule.alpha) if a
    )
    value = min(1.0, max(0.0, _log_weight(schedule) / math.log(g)))
    return AbscissaReport(
        g=g,
        terms=terms,
        value=value,
        diverges_at_sigma_c=schedule.m_set_infinite,
        m_set_infinite=schedule.m_set_infinite,
        polynomial=not schedule.m_set_infinite,
    )


def corollary_abscissa(g: int) -> float:
    """log(g - 1) / log g, the abscissa when each position forbids one digit."""
    return math.log(g - 1) / math.log(g)


def critical_ratio(schedule: Schedule, sigma: float) -> float:
    """prod (g - k)^alpha_k / g^sigma; exactly 1 at sigma = sigma_c."""
    exponent = _log_weight(schedule) - sigma * math.log(schedule.g)
    try:
        return math.exp(exponent)
    except OverflowError:
        return math.inf


def empirical_abscissa(schedule: Schedule, m: int) -> float:
    """Growth-rate estimate log|A intersected with I_m| / (m log g).

    Raises:
        KempnerError: EMPTY_INTERVAL when m is not in M.
    """
    return log_count(schedule, m) / (m * math.log(schedule.g))


def classify(schedule: Schedule, sigma: float) -> Classification:
    """Converges above sigma_c, diverges at or below it, Polynomial when M is finite."""
    sigma_c = abscissa(schedule).value
    critical = abs(sigma - sigma_c) < CRITICAL_TOLERANCE
    if not schedule.m_set_infinite:
        verdict = Verdict.POLYNOMIAL
    elif sigma <= sigma_c:
        verdict = Verdict.DIVERGES
    else:
        verdict = Verdict.CONVERGES
    if critical:
        logger.debug("sigma=%r is within float resolution of sigma_c", sigma)
    return Classification(
        sigma=sigma, sigma_c=sigma_c, verdict=verdict, critical=critical
    )
