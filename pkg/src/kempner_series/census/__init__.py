from .census import (
    brute_force_count,
    census_table,
    enumerate_interval,
    interval_blocks,
    interval_count,
    interval_values,
    is_member,
    log_count,
    members_below,
    verify_census,
)
from .types import CountMethod, IntervalCensus, Member

__all__ = [
    "CountMethod",
    "IntervalCensus",
    "Member",
    "brute_force_count",
    "census_table",
    "enumerate_interval",
    "interval_blocks",
    "interval_count",
    "interval_values",
    "is_member",
    "log_count",
    "members_below",
    "verify_census",
]
