"""Verdict reports shared by every verification routine.

A report is machine-readable: a check identifier, the parameters it ran
with, pass/fail/precondition-error status, per-degree or per-index detail
records, and a serialized counterexample whenever the status is fail.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
PRECONDITION = "precondition-error"

SCHEMA_VERSION = 1


@dataclass
class VerdictReport:
    check: str
    params: dict[str, Any]
    status: str
    details: list[dict[str, Any]] = field(default_factory=list)
    counterexample: Any = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status == FAIL and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "details": self.details,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        }


class ReportBuilder:
    """Accumulates detail records and failures for one check run."""

    def __init__(self, check: str, params: dict[str, Any]):
        self.check = check
        self.params = params
        self.details: list[dict[str, Any]] = []
        self.counterexample: Any = None
        self._t0 = time.perf_counter()

    def record(self, ok: bool, counterexample: Any = None, **fields: Any) -> bool:
        self.details.append({**fields, "ok": bool(ok)})
        if not ok and self.counterexample is None:
            self.counterexample = counterexample if counterexample is not None else fields
        return ok

    def precondition(self, message: str) -> VerdictReport:
        return VerdictReport(self.check, self.params, PRECONDITION,
                             [{"error": message}], None, self._elapsed())

    def finish(self) -> VerdictReport:
        ok = all(d.get("ok", True) for d in self.details)
        return VerdictReport(self.check, self.params,
                             PASS if ok else FAIL,
                             self.details,
                             None if ok else self.counterexample,
                             self._elapsed())

    def _elapsed(self) -> float:
        return round((time.perf_counter() - self._t0) * 1000.0, 3)
