"""Loader for schedule spec JSON documents.

Format: {"g": 10, "preperiod": [[...], ...], "period": [[9]]}
"""

import hashlib
import json
import os
from typing import Any

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from kempner_series.errors import KempnerError, KempnerErrorCode

from .schedule import build_schedule
from .types import Schedule


class ScheduleDocument(BaseModel):
    """Raw, unvalidated shape of a schedule spec document."""

    model_config = ConfigDict(extra="forbid")

    g: StrictInt
    preperiod: list[list[StrictInt]] = []
    period: list[list[StrictInt]]


def parse_schedule(document: Any) -> Schedule:
    """Build a schedule from a decoded spec document.

    Raises:
        KempnerError: SPEC_PARSE_ERROR when the document has the wrong shape;
            schedule validation codes otherwise.
    """
    try:
        raw = ScheduleDocument.model_validate(document)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
            for err in e.errors()
        )
        raise KempnerError(
            KempnerErrorCode.SPEC_PARSE_ERROR,
            "Malformed schedule spec",
            problems,
        ) from e
    return build_schedule(raw.g, raw.preperiod, raw.period)


def schedule_spec(schedule: Schedule) -> dict[str, Any]:
    """Canonical spec document of a schedule (digits sorted, fixed key order)."""
    return {
        "g": schedule.g,
        "preperiod": [u.sorted_digits for u in schedule.preperiod],
        "period": [u.sorted_digits for u in schedule.period],
    }


def spec_hash(schedule: Schedule) -> str:
    """SHA-256 of the canonical spec document."""
    canonical = json.dumps(schedule_spec(schedule), separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class ScheduleSpecFile:
    """Lazy loader for a schedule spec file."""

    def __init__(self, spec_path: str):
        """
        Initialize the loader.

        Args:
            spec_path: Path to the schedule spec JSON file
        """
        self.spec_path = spec_path
        self._schedule: Schedule | None = None

    @property
    def exists(self) -> bool:
        return os.path.exists(self.spec_path)

    @property
    def schedule(self) -> Schedule:
        if self._schedule is None:
            self._schedule = self._load()
        return self._schedule

    def _load(self) -> Schedule:
        if not self.exists:
            raise KempnerError(
                KempnerErrorCode.SPEC_PARSE_ERROR,
                "Schedule spec not found",
                f"no such file: {self.spec_path}",
            )
        try:
            with open(self.spec_path, "r", encoding="utf-8") as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            raise KempnerError(
                KempnerErrorCode.SPEC_PARSE_ERROR,
                "Malformed schedule spec",
                f"invalid JSON in {self.spec_path}: {e}",
            ) from e
        return parse_schedule(document)


def load_schedule(spec_path: str) -> Schedule:
    return ScheduleSpecFile(spec_path).schedule
