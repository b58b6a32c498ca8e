from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

CRITICAL = "critical"


class Command(str, Enum):
    SIGMA_C = "sigma-c"
    CENSUS = "census"
    ENUMERATE = "enumerate"
    SUM = "sum"
    ESTIMATE = "estimate"
    CERTIFY = "certify"
    CLASSIFY = "classify"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """One validated CLI invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command
    schedule_path: str
    output_format: OutputFormat = OutputFormat.JSON
    output_path: str | None = None

    m_range: tuple[int, int] | None = None
    sigma: float | Literal["critical"] | None = None
    m_enumerated: int = Field(default=6, ge=0)
    m_counted: int | None = Field(default=None, ge=0)
    m_max: int = Field(default=100, ge=1)
    verify: bool = False
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self) -> "RunConfig":
        if self.m_range is not None:
            low, high = self.m_range
            if low < 1 or high < low:
                raise ValueError(
                    f"--m needs 1 <= a <= b, got {low}..{high}"
                )
        if self.m_counted is not None and self.m_counted < self.m_enumerated:
            raise ValueError(
                f"--m-counted ({self.m_counted}) must be >= --m-enumerated ({self.m_enumerated})"
            )
        return self

    @property
    def m_values(self) -> range:
        low, high = self.m_range or (1, 1)
        return range(low, high + 1)

    @property
    def counted_depth(self) -> int:
        return self.m_enumerated if self.m_counted is None else self.m_counted
