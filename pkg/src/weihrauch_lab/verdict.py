from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any


class Status(str, enum.Enum):
    VALID = "valid"
    INVALID = "invalid"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a truncated check.

    ``Unknown`` means the budget did not settle the question; it is never
    a disguised ``Invalid``.
    """

    status: Status
    witness: Any = None
    reason: str = ""

    @classmethod
    def valid(cls, reason: str = "") -> "Verdict":
        return cls(Status.VALID, None, reason)

    @classmethod
    def invalid(cls, witness: Any = None, reason: str = "") -> "Verdict":
        return cls(Status.INVALID, witness, reason)

    @classmethod
    def unknown(cls, reason: str = "") -> "Verdict":
        return cls(Status.UNKNOWN, None, reason)

    @property
    def is_valid(self) -> bool:
        return self.status is Status.VALID

    @property
    def is_invalid(self) -> bool:
        return self.status is Status.INVALID

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def to_json(self) -> dict:
        return {"status": self.status.value, "witness": _jsonable(self.witness), "reason": self.reason}


def _jsonable(x: Any) -> Any:
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (int, str, float, bool)):
        return x
    return repr(x)


def combine(verdicts) -> Verdict:
    """First Invalid wins, then any Unknown, else Valid."""
    unknown = None
    for v in verdicts:
        if v.is_invalid:
            return v
        if v.is_unknown and unknown is None:
            unknown = v
    return unknown if unknown is not None else Verdict.valid()
