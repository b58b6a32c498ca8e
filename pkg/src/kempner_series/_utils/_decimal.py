import sys

# Stay well inside the interpreter's int/str conversion limit.
_CHUNK_DIGITS = 1000


def int_to_decimal(n: int) -> str:
    """Exact decimal rendering of an arbitrarily large integer."""
    if n < 0:
        return "-" + int_to_decimal(-n)
    if getattr(sys, "get_int_max_str_digits", lambda: 0)() == 0:
        return str(n)
    return _split(n, _CHUNK_DIGITS)


def _split(n: int, digits: int) -> str:
    if n < 10**digits:
        return str(n)
    width = digits
    while 10 ** (2 * width) <= n:
        width *= 2
    # n >= 10**width, so high >= 1 and neither half carries leading zeros
    high, low = divmod(n, 10**width)
    return _split(high, digits) + _split(low, digits).rjust(width, "0")
