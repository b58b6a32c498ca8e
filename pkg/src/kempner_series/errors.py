from enum import Enum
from typing import Any


class KempnerErrorCode(Enum):
    RADIX_TOO_SMALL = "RADIX_TOO_SMALL"
    RADIX_TOO_LARGE = "RADIX_TOO_LARGE"
    IMPROPER_DIGIT_SET = "IMPROPER_DIGIT_SET"
    DIGIT_OUT_OF_RANGE = "DIGIT_OUT_OF_RANGE"
    EMPTY_PERIOD = "EMPTY_PERIOD"
    INVALID_ARGUMENT = "INVALID_ARGUMENT"

    INTERVAL_TOO_LARGE = "INTERVAL_TOO_LARGE"
    EMPTY_INTERVAL = "EMPTY_INTERVAL"
    ENUMERATION_TOO_LARGE = "ENUMERATION_TOO_LARGE"

    TAIL_NOT_CLOSABLE = "TAIL_NOT_CLOSABLE"
    FLOAT_OVERFLOW = "FLOAT_OVERFLOW"
    SIGMA_ABOVE_CRITICAL = "SIGMA_ABOVE_CRITICAL"
    M_SET_FINITE = "M_SET_FINITE"

    SPEC_PARSE_ERROR = "SPEC_PARSE_ERROR"
    VERIFICATION_FAILED = "VERIFICATION_FAILED"


class KempnerErrorCategory(str, Enum):
    """Where the fault lies."""

    USER = "User"
    LIMIT = "Limit"
    NUMERIC = "Numeric"
    SYSTEM = "System"


class KempnerError(ValueError):
    """Structured error raised by every kempner_series operation."""

    def __init__(
        self,
        code: KempnerErrorCode,
        title: str,
        detail: str,
        category: KempnerErrorCategory = KempnerErrorCategory.USER,
        prefix: str = "KEMPNER",
    ):
        self.code = code
        self.title = title
        self.detail = detail
        self.category = category
        self.prefix = prefix
        super().__init__(f"[{prefix}.{code.value}] {title}: {detail}")

    @property
    def error_info(self) -> dict[str, Any]:
        return {
            "code": f"{self.prefix}.{self.code.value}",
            "title": self.title,
            "detail": self.detail,
            "category": self.category.value,
        }
