"""Structured results of cross-checks between independent computation routes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

PASS = "pass"
FAIL = "fail"
PASS_KNOWN = "pass_with_known_discrepancies"


def _jsonable(value: Any) -> Any:
    # ints become decimal strings; bool is left alone
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _sort_key(record: dict) -> tuple:
    return tuple(sorted((str(k), repr(v)) for k, v in record["cell"].items()))


@dataclass
class Mismatch:
    cell: dict[str, Any]
    values: dict[str, Any]

    def as_dict(self) -> dict:
        return {"cell": dict(self.cell), "values": dict(self.values)}


@dataclass
class VerificationReport:
    suite: str
    cells_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    known_discrepancies: list[Mismatch] = field(default_factory=list)

    def check(self, cell: dict[str, Any], values: dict[str, Any]) -> bool:
        """Record one cell; every route value must agree. Returns True on agreement."""
        self.cells_checked += 1
        distinct = {repr(v) for v in values.values()}
        if len(distinct) > 1:
            self.mismatches.append(Mismatch(dict(cell), dict(values)))
            return False
        return True

    def classify(self, allowlisted) -> None:
        """Mark the mismatches accepted by ``allowlisted(mismatch)`` as known discrepancies."""
        self.known_discrepancies = [m for m in self.mismatches if allowlisted(m)]

    def merge(self, other: "VerificationReport") -> None:
        self.cells_checked += other.cells_checked
        self.mismatches.extend(other.mismatches)
        self.known_discrepancies.extend(other.known_discrepancies)

    @property
    def status(self) -> str:
        if not self.mismatches:
            return PASS
        if len(self.known_discrepancies) == len(self.mismatches):
            return PASS_KNOWN
        return FAIL

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        mism = sorted((m.as_dict() for m in self.mismatches), key=_sort_key)
        known = sorted((m.as_dict() for m in self.known_discrepancies), key=_sort_key)
        return {
            "suite": self.suite,
            "status": self.status,
            "cells_checked": _jsonable(self.cells_checked),
            "mismatches": _jsonable(mism),
            "known_discrepancies": _jsonable(known),
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


def combine(suite: str, parts: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(suite)
    for part in parts:
        out.merge(part)
    return out
