"""Structured outcomes of criterion checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.HOLDS if flag else cls.FAILS

    def __bool__(self) -> bool:
        # refuse silent truthiness: not-applicable must never read as "fails"
        raise TypeError("use .holds / .fails on a Verdict, not bool()")

    @property
    def holds(self) -> bool:
        return self is Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self is Verdict.FAILS


class ConsistencyError(RuntimeError):
    """Two independent routes to the same answer disagreed."""


@dataclass
class VerdictReport:
    theorem: str
    verdict: Verdict
    conditions: dict[str, Any] = field(default_factory=dict)
    witness: Any = None
    route: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict is Verdict.FAILS and self.witness is None:
            raise ValueError(f"failing report for {self.theorem} needs a witness")

    @property
    def holds(self) -> bool:
        return self.verdict.holds

    @property
    def fails(self) -> bool:
        return self.verdict.fails

    @property
    def applicable(self) -> bool:
        return self.verdict is not Verdict.NOT_APPLICABLE

    def to_dict(self) -> dict:
        verdict = None if self.verdict is Verdict.NOT_APPLICABLE else self.verdict.holds
        out = {
            "theorem": self.theorem,
            "verdict": verdict,
            "conditions": jsonable(self.conditions),
            "witness": jsonable(self.witness),
        }
        if self.route is not None:
            out["route"] = self.route
        if self.details:
            out["details"] = jsonable(self.details)
        return out


def jsonable(obj: Any) -> Any:
    """Convert reports, complexes, graphs and sets into plain JSON data."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, Verdict):
        return None if obj is Verdict.NOT_APPLICABLE else obj.holds
    if isinstance(obj, VerdictReport):
        return obj.to_dict()
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        items = [jsonable(x) for x in obj]
        try:
            return sorted(items)
        except TypeError:
            return items
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return str(obj)
