"""Structured check outcomes and canonical, byte-stable JSON reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

REPORT_VERSION = "1"


@dataclass
class CheckReport:
    """Outcome of one verification.

    ``status`` is one of ``pass``, ``fail``, ``info``.  A failing report
    always carries ``first_failure``; a passing one never does.  Elapsed
    time is kept for console output but excluded from the canonical JSON
    so reports stay byte-stable across runs.
    """

    check_name: str
    status: str
    params: dict[str, str] = field(default_factory=dict)
    ratio: str | None = None
    degrees: str | None = None
    first_failure: dict | None = None
    note: str | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status == "fail" and self.first_failure is None:
            raise ValueError("failing report requires first_failure")
        if self.status == "pass" and self.first_failure is not None:
            raise ValueError("passing report cannot carry first_failure")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def canonical(self) -> dict:
        out: dict = {
            "check_name": self.check_name,
            "status": self.status,
            "params": dict(sorted(self.params.items())),
        }
        if self.ratio is not None:
            out["ratio"] = self.ratio
        if self.degrees is not None:
            out["degrees"] = self.degrees
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        if self.note is not None:
            out["note"] = self.note
        return out


class Timer:
    """Context helper for ``elapsed_ms`` on constructed reports."""

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        return False

    @property
    def ms(self) -> float:
        return (time.perf_counter() - self.t0) * 1000.0


def passed(name: str, params=None, ratio=None, degrees=None, note=None,
           elapsed_ms: float = 0.0) -> CheckReport:
    return CheckReport(name, "pass", dict(params or {}), ratio=ratio,
                       degrees=degrees, note=note, elapsed_ms=elapsed_ms)


def failed(name: str, failure: dict, params=None, note=None,
           elapsed_ms: float = 0.0) -> CheckReport:
    return CheckReport(name, "fail", dict(params or {}), first_failure=failure,
                       note=note, elapsed_ms=elapsed_ms)


def info(name: str, note: str, params=None, ratio=None, degrees=None,
         elapsed_ms: float = 0.0) -> CheckReport:
    return CheckReport(name, "info", dict(params or {}), ratio=ratio,
                       degrees=degrees, note=note, elapsed_ms=elapsed_ms)


def render_report(reports: list[CheckReport], config: dict) -> str:
    """Canonical JSON text: sorted keys, no timing, trailing newline."""
    payload = {
        "version": REPORT_VERSION,
        "config": config,
        "reports": [r.canonical() for r in reports],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def emit_report(reports: list[CheckReport], config: dict, path: str) -> None:
    text = render_report(reports, config)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def render_matrix_dump(matrix) -> str:
    """Canonical JSON for a matrix dump (bit-exact golden form)."""
    return json.dumps(matrix.to_dump_dict(), sort_keys=True) + "\n"
