from collections.abc import Iterable
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

MAX_RADIX = 64


class DigitSet(BaseModel):
    """Forbidden digits U_i at one position of the g-adic representation."""

    model_config = ConfigDict(frozen=True)

    digits: frozenset[int] = frozenset()

    @classmethod
    def of(cls, digits: Iterable[int] = ()) -> "DigitSet":
        return cls(digits=frozenset(digits))

    @property
    def mask(self) -> int:
        """Bit mask with bit d set for every forbidden digit d."""
        mask = 0
        for digit in self.digits:
            mask |= 1 << digit
        return mask

    @property
    def size(self) -> int:
        return len(self.digits)

    @property
    def sorted_digits(self) -> list[int]:
        return sorted(self.digits)

    def __contains__(self, digit: object) -> bool:
        return digit in self.digits

    def allowed(self, g: int, leading: bool = False) -> list[int]:
        """Digits a position may carry, ascending; a leading position never carries 0."""
        start = 1 if leading else 0
        return [d for d in range(start, g) if d not in self.digits]

    def blocks_interval(self, g: int) -> bool:
        """True when U = [1, g-1], i.e. no m-digit number can end here."""
        return self.mask == (1 << g) - 2


class Schedule(BaseModel):
    """Eventually periodic forbidden-digit schedule i -> U_i for radix g.

    Only `build_schedule` should create instances: the derived fields are
    computed and certified there.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: int = Field(ge=2, le=MAX_RADIX)
    preperiod: tuple[DigitSet, ...] = ()
    period: tuple[DigitSet, ...] = Field(min_length=1)

    preperiod_profile: tuple[int, ...]
    period_profile: tuple[int, ...]
    alpha: tuple[Fraction, ...]
    beta: int = Field(ge=1)
    m_set_infinite: bool

    @property
    def preperiod_length(self) -> int:
        return len(self.preperiod)

    @property
    def period_length(self) -> int:
        return len(self.period)
