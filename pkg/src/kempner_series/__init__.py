"""Exact counts, abscissa of convergence and rigorous enclosures for Dirichlet
series over integers with missing g-adic digits."""

from .census import (
    CountMethod,
    IntervalCensus,
    Member,
    brute_force_count,
    census_table,
    enumerate_interval,
    interval_count,
    is_member,
    log_count,
    members_below,
    verify_census,
)
from .errors import KempnerError, KempnerErrorCategory, KempnerErrorCode
from .schedule import (
    DigitSet,
    Schedule,
    build_schedule,
    constant_schedule,
    digit_profile,
    epsilon_bound,
    factor_product,
    forbidden_at,
    in_m_set,
    load_schedule,
    m_set_prefix,
    max_m,
    parse_schedule,
    spec_hash,
)
from .series import (
    AbscissaReport,
    Classification,
    DivergenceCertificate,
    EnclosureVerdict,
    SeriesEnclosure,
    Verdict,
    abscissa,
    classify,
    corollary_abscissa,
    critical_ratio,
    divergence_certificate,
    empirical_abscissa,
    evaluate,
)

__all__ = [
    "AbscissaReport",
    "Classification",
    "CountMethod",
    "DigitSet",
    "DivergenceCertificate",
    "EnclosureVerdict",
    "IntervalCensus",
    "KempnerError",
    "KempnerErrorCategory",
    "KempnerErrorCode",
    "Member",
    "Schedule",
    "SeriesEnclosure",
    "Verdict",
    "abscissa",
    "brute_force_count",
    "build_schedule",
    "census_table",
    "classify",
    "constant_schedule",
    "corollary_abscissa",
    "critical_ratio",
    "digit_profile",
    "divergence_certificate",
    "empirical_abscissa",
    "enumerate_interval",
    "epsilon_bound",
    "evaluate",
    "factor_product",
    "forbidden_at",
    "in_m_set",
    "interval_count",
    "is_member",
    "load_schedule",
    "log_count",
    "m_set_prefix",
    "max_m",
    "members_below",
    "parse_schedule",
    "spec_hash",
    "verify_census",
]
