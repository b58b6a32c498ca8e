from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from kempner_series._utils import int_to_decimal


class CountMethod(str, Enum):
    """How an interval count was obtained."""

    CLOSED_FORM = "ClosedForm"
    ENUMERATED = "Enumerated"


class IntervalCensus(BaseModel):
    """Member count of A intersected with I_m = [g^(m-1), g^m - 1]."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    m: int = Field(ge=1)
    in_m: bool = Field(alias="in_M")
    count: int = Field(ge=0)
    method: CountMethod

    @field_serializer("count")
    def _count_as_decimal(self, count: int) -> str:
        return int_to_decimal(count)


class Member(BaseModel):
    """A member of A together with its digits c_0 .. c_{m-1}."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=1)
    digits: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.digits)
