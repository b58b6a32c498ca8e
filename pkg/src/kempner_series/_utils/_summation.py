import math
import sys
from collections.abc import Iterable

UNIT_ROUNDOFF = sys.float_info.epsilon / 2


class CompensatedSum:
    """Running sum with Neumaier error compensation.

    Keeps a separate carry for the low-order bits lost by each addition, so
    the result does not depend on how large the running total has become.

    Example:
        >>> acc = CompensatedSum()
        >>> for x in (1e16, 1.0, -1e16):
        ...     acc += x
        >>> acc.value
        1.0
    """

    __slots__ = ("_sum", "_carry", "count")

    def __init__(self) -> None:
        self._sum = 0.0
        self._carry = 0.0
        self.count = 0

    def add(self, value: float) -> None:
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._carry += (self._sum - total) + value
        else:
            self._carry += (value - total) + self._sum
        self._sum = total
        self.count += 1

    def extend(self, values: Iterable[float]) -> None:
        for value in values:
            self.add(value)

    def __iadd__(self, value: float) -> "CompensatedSum":
        self.add(value)
        return self

    @property
    def value(self) -> float:
        return self._sum + self._carry

    def error_bound(self, term_relative_error: float = 0.0) -> float:
        """Absolute error bound of `value` for a sum of non-negative terms.

        Args:
            term_relative_error: Relative error already present in each term
                before it was added.
        """
        u = UNIT_ROUNDOFF
        total = abs(self.value)
        compensation = 2 * u * total + 2 * self.count * u * u * total
        return compensation + term_relative_error * total * (1 + 2 * u)


def block_sum(values: Iterable[float]) -> float:
    """Correctly rounded sum of a finite block of floats."""
    return math.fsum(values)
