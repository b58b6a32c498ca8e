from ._decimal import int_to_decimal
from ._intervals import (
    interval_precision,
    log_power,
    lower_float,
    to_interval,
    upper_float,
)
from ._settings import KempnerSettings, get_settings
from ._summation import CompensatedSum, block_sum

__all__ = [
    "CompensatedSum",
    "KempnerSettings",
    "block_sum",
    "get_settings",
    "int_to_decimal",
    "interval_precision",
    "log_power",
    "lower_float",
    "to_interval",
    "upper_float",
]
