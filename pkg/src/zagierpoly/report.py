"""Structured results of verification sweeps."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import RatPoly

__all__ = ["Check", "VerifyReport", "jsonable", "merge_reports"]

#: At most this many failure witnesses are kept per check.
MAX_WITNESSES = 10


def jsonable(value: Any) -> Any:
    """Convert exact values to JSON-safe ones; rationals become "p/q" strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return "inf" if value == float("inf") else value
    if isinstance(value, RatPoly):
        return [str(c) for c in value.coeffs]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class Check:
    """One claim checked over a range of instances."""

    name: str
    anchor: str
    checked: int = 0
    failed: int = 0
    witnesses: list[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if self.failed else "pass"

    def record(self, ok: bool, **witness) -> bool:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)
        return ok

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "checked": self.checked,
        }
        if self.failed:
            d["failed"] = self.failed
            d["witness"] = jsonable(self.witnesses)
        return d


@dataclass
class VerifyReport:
    suite: str
    range: tuple[int, int]
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def check(self, name: str, anchor: str) -> Check:
        c = Check(name, anchor)
        self.checks.append(c)
        return c

    @property
    def failures(self) -> int:
        return sum(c.failed for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if c.failed]

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "range": list(self.range),
            "checks": [c.to_dict() for c in self.checks],
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"{self.suite} [{self.range[0]}..{self.range[1]}]"]
        for c in self.checks:
            lines.append(f"  {c.status.upper():4} {c.name} ({c.checked} instances)")
        return "\n".join(lines)


def merge_reports(suite: str, reports: list[VerifyReport]) -> VerifyReport:
    lo = min(r.range[0] for r in reports)
    hi = max(r.range[1] for r in reports)
    out = VerifyReport(suite, (lo, hi))
    for r in reports:
        out.checks.extend(r.checks)
        out.elapsed_ms += r.elapsed_ms
    out.elapsed_ms = round(out.elapsed_ms, 3)
    return out
