from .config import (
    ScheduleSpecFile,
    load_schedule,
    parse_schedule,
    schedule_spec,
    spec_hash,
)
from .schedule import (
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
from .types import MAX_RADIX, DigitSet, Schedule

__all__ = [
    "MAX_RADIX",
    "DigitSet",
    "Schedule",
    "ScheduleSpecFile",
    "build_schedule",
    "constant_schedule",
    "digit_profile",
    "epsilon_bound",
    "factor_product",
    "forbidden_at",
    "in_m_set",
    "load_schedule",
    "m_set_prefix",
    "max_m",
    "parse_schedule",
    "schedule_spec",
    "spec_hash",
]
