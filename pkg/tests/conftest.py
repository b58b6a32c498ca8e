import tempfile
from typing import Generator

import pytest

from kempner_series import Schedule, build_schedule, constant_schedule

# name -> (g, preperiod, period)
CORPUS: dict[str, tuple[int, list[list[int]], list[list[int]]]] = {
    "all-integers-10": (10, [], [[]]),
    "no-zero-10": (10, [], [[0]]),
    "kempner-10": (10, [], [[9]]),
    "no-three-10": (10, [], [[3]]),
    "no-zero-nine-10": (10, [], [[0, 9]]),
    "no-one-two-10": (10, [], [[1, 2]]),
    "alternating-10": (10, [], [[9], []]),
    "period-three-10": (10, [], [[0], [5], [7, 8]]),
    "late-kempner-10": (10, [[], [], []], [[9]]),
    "shifted-10": (10, [[1]], [[2], [3]]),
    "empty-2": (2, [], [[1]]),
    "mersenne-2": (2, [], [[0]]),
    "no-one-3": (3, [], [[1]]),
    "alternating-3": (3, [], [[0], [2]]),
    "gap-3": (3, [[1, 2]], [[]]),
    "finite-3": (3, [[], []], [[1, 2]]),
}


def corpus_schedule(name: str) -> Schedule:
    g, preperiod, period = CORPUS[name]
    return build_schedule(g, preperiod, period)


@pytest.fixture
def kempner() -> Schedule:
    """Base 10, digit 9 forbidden everywhere."""
    return constant_schedule(10, [9])


@pytest.fixture
def empty_set() -> Schedule:
    """Base 2 with digit 1 forbidden: no positive integer qualifies."""
    return constant_schedule(2, [1])


@pytest.fixture
def alternating() -> Schedule:
    """Base 10, digit 9 forbidden at even positions only."""
    return build_schedule(10, [], [[9], []])


@pytest.fixture
def temp_dir() -> Generator[str, None, None]:
    """Provide a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield tmp_dir
