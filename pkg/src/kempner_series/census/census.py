import itertools
import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from kempner_series._utils import get_settings
from kempner_series.errors import (
    KempnerError,
    KempnerErrorCategory,
    KempnerErrorCode,
)
from kempner_series.schedule import (
    Schedule,
    digit_profile,
    factor_product,
    forbidden_at,
    in_m_set,
)

from .types import CountMethod, IntervalCensus, Member

logger = logging.getLogger(__name__)

# Upper bound on the cached low-order block of the enumeration odometer.
_SUFFIX_BLOCK_LIMIT = 1 << 16


def _require_digit_length(m: int) -> None:
    if m < 1:
        raise KempnerError(
            KempnerErrorCode.INVALID_ARGUMENT,
            "Invalid digit length",
            f"m must be >= 1, got {m}",
        )


def _position_masks(schedule: Schedule, m: int) -> list[int]:
    return [forbidden_at(schedule, i).mask for i in range(m)]


def _avoids_forbidden(n: int, g: int, masks: Sequence[int]) -> bool:
    """True when digit c_i of n is outside U_i for every position (masks[i] = U_i)."""
    i = 0
    while n:
        n, digit = divmod(n, g)
        if masks[i] >> digit & 1:
            return False
        i += 1
    return True


def _digit_length(n: int, g: int) -> int:
    m = 0
    while n:
        n //= g
        m += 1
    return m


def is_member(schedule: Schedule, n: int) -> bool:
    """True iff every g-adic digit c_i of n avoids U_i."""
    if n < 1:
        raise KempnerError(
            KempnerErrorCode.INVALID_ARGUMENT,
            "Not a positive integer",
            f"membership is defined for n >= 1, got {n}",
        )
    g = schedule.g
    return _avoids_forbidden(n, g, _position_masks(schedule, _digit_length(n, g)))


def interval_count(schedule: Schedule, m: int) -> IntervalCensus:
    """Exact |A intersected with I_m| from the closed-form product.

    The leading position contributes g - |U_{m-1}| choices when 0 is forbidden
    there and one fewer otherwise; every lower position contributes
    g - |U_i|.
    """
    _require_digit_length(m)
    if not in_m_set(schedule, m):
        return IntervalCensus(
            m=m, in_m=False, count=0, method=CountMethod.CLOSED_FORM
        )

    leading = forbidden_at(schedule, m - 1)
    leading_choices = schedule.g - leading.size
    if 0 not in leading:
        leading_choices -= 1
    count = leading_choices * factor_product(schedule, m - 1)
    logger.debug("Closed-form count m=%d: %d leading choices", m, leading_choices)
    return IntervalCensus(
        m=m, in_m=True, count=count, method=CountMethod.CLOSED_FORM
    )


def log_count(schedule: Schedule, m: int) -> float:
    """Natural log of |A intersected with I_m| without forming the big integer.

    Raises:
        KempnerError: EMPTY_INTERVAL when m is not in M.
    """
    _require_digit_length(m)
    if not in_m_set(schedule, m):
        raise KempnerError(
            KempnerErrorCode.EMPTY_INTERVAL,
            "Empty interval",
            f"no {m}-digit member exists (U_{m - 1} = [1, {schedule.g - 1}])",
        )
    g = schedule.g
    leading = forbidden_at(schedule, m - 1)
    leading_choices = g - leading.size - (0 if 0 in leading else 1)
    profile = digit_profile(schedule, m - 1) if m > 1 else []
    terms = [
        count * math.log(g - k)
        for k, count in enumerate(profile)
        if count
    ]
    terms.append(math.log(leading_choices))
    return math.fsum(terms)


def _weighted_digits(schedule: Schedule, m: int) -> list[list[int]]:
    """Per-position lists of c_i * g^i, position 0 first, digits ascending."""
    g = schedule.g
    return [
        [d * g**i for d in forbidden_at(schedule, i).allowed(g, leading=i == m - 1)]
        for i in range(m)
    ]


def interval_blocks(schedule: Schedule, m: int) -> Iterator[tuple[int, list[int]]]:
    """Members of A in I_m as (prefix, suffix block) pairs, ascending.

    The high positions run as an odometer (most significant digit outermost)
    and the low positions are expanded once into a sorted block; the members
    are prefix + s for s in the block.
    """
    _require_digit_length(m)
    weighted = _weighted_digits(schedule, m)
    if any(not choices for choices in weighted):
        return

    split = 0
    block_size = 1
    while split < m - 1 and block_size * len(weighted[split]) <= _SUFFIX_BLOCK_LIMIT:
        block_size *= len(weighted[split])
        split += 1

    suffix = [sum(combo) for combo in itertools.product(*reversed(weighted[:split]))]
    for prefix in itertools.product(*reversed(weighted[split:])):
        yield sum(prefix), suffix


def interval_values(schedule: Schedule, m: int) -> Iterator[int]:
    """Members of A in I_m, ascending."""
    for base, suffix in interval_blocks(schedule, m):
        for offset in suffix:
            yield base + offset


def enumerate_interval(schedule: Schedule, m: int) -> Iterator[Member]:
    """Stream every member of A in I_m in increasing order, with its digits."""
    g = schedule.g
    for value in interval_values(schedule, m):
        digits = []
        n = value
        for _ in range(m):
            n, digit = divmod(n, g)
            digits.append(digit)
        yield Member(value=value, digits=tuple(digits))


def members_below(schedule: Schedule, m_max: int) -> Iterator[int]:
    """All members below g^m_max, ascending."""
    for m in range(1, m_max + 1):
        yield from interval_values(schedule, m)


def _scan_chunk(g: int, masks: Sequence[int], start: int, stop: int) -> int:
    return sum(1 for n in range(start, stop) if _avoids_forbidden(n, g, masks))


def brute_force_count(
    schedule: Schedule,
    m: int,
    max_scan: int | None = None,
    workers: int = 1,
) -> int:
    """Count members of I_m by testing every integer in the interval.

    Independent of the closed form and of the enumeration odometer.

    Args:
        schedule: The forbidden-digit schedule.
        m: Digit length.
        max_scan: Refuse intervals with g^m above this (KEMPNER_MAX_SCAN).
        workers: Processes to split the scan across.

    Raises:
        KempnerError: INTERVAL_TOO_LARGE when g^m exceeds the scan guard.
    """
    _require_digit_length(m)
    limit = max_scan if max_scan is not None else get_settings().max_scan
    g = schedule.g
    if g**m > limit:
        raise KempnerError(
            KempnerErrorCode.INTERVAL_TOO_LARGE,
            "Interval too large",
            f"scanning {g}^{m} integers exceeds the limit {limit}",
            KempnerErrorCategory.LIMIT,
        )

    masks = _position_masks(schedule, m)
    start, stop = g ** (m - 1), g**m
    if workers <= 1:
        count = _scan_chunk(g, masks, start, stop)
    else:
        step = -(-(stop - start) // workers)
        bounds = [(lo, min(lo + step, stop)) for lo in range(start, stop, step)]
        logger.info("Scanning %d integers across %d workers", stop - start, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_scan_chunk, g, masks, lo, hi) for lo, hi in bounds
            ]
            count = sum(f.result() for f in futures)
    logger.debug("Brute-force count m=%d: %d", m, count)
    return count


def census_table(
    schedule: Schedule,
    m_values: Iterable[int],
    verify: bool = False,
    max_scan: int | None = None,
    workers: int = 1,
) -> list[IntervalCensus]:
    """Closed-form census rows, each followed by a brute-force row when verifying."""
    rows: list[IntervalCensus] = []
    for m in m_values:
        closed = interval_count(schedule, m)
        rows.append(closed)
        if verify:
            scanned = brute_force_count(schedule, m, max_scan=max_scan, workers=workers)
            rows.append(
                IntervalCensus(
                    m=m,
                    in_m=scanned > 0,
                    count=scanned,
                    method=CountMethod.ENUMERATED,
                )
            )
    return rows


def verify_census(rows: Iterable[IntervalCensus]) -> None:
    """Check closed-form rows against the enumerated rows for the same m.

    Raises:
        KempnerError: VERIFICATION_FAILED listing every mismatching m.
    """
    closed: dict[int, int] = {}
    enumerated: dict[int, int] = {}
    for row in rows:
        target = closed if row.method == CountMethod.CLOSED_FORM else enumerated
        target[row.m] = row.count

    mismatches = [
        m for m, count in enumerated.items() if closed.get(m) != count
    ]
    if mismatches:
        raise KempnerError(
            KempnerErrorCode.VERIFICATION_FAILED,
            "Closed form disagrees with the oracle",
            f"mismatch at m = {', '.join(str(m) for m in sorted(mismatches))}",
            KempnerErrorCategory.SYSTEM,
        )
