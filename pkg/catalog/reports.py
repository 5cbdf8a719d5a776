from __future__ import annotations

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple

import jsonschema

logger = logging.getLogger(__name__)

TOOL_VERSION = "0.1.0"
SCHEMA_PATH = Path(__file__).resolve().parents[1] / "docs" / "report.schema.json"

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_DISCREPANCY = "discrepancy"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DISCREPANCY = 3


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    observed: Any
    status: str

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
        }


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    spec: str
    checks: Tuple[Check, ...]
    seed: int
    runtime_ms: int
    tool_version: str = TOOL_VERSION
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.checks}
        if STATUS_FAIL in statuses:
            return STATUS_FAIL
        if STATUS_DISCREPANCY in statuses:
            return STATUS_DISCREPANCY
        return STATUS_PASS

    @property
    def exit_code(self) -> int:
        return {
            STATUS_PASS: EXIT_PASS,
            STATUS_FAIL: EXIT_FAIL,
            STATUS_DISCREPANCY: EXIT_DISCREPANCY,
        }[self.status]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "spec": self.spec,
            "checks": [c.as_dict() for c in self.checks],
            "seed": self.seed,
            "runtime_ms": self.runtime_ms,
            "tool_version": self.tool_version,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False, sort_keys=True)


def render_table(columns: List[str], rows: List[List[Any]]) -> List[str]:
    cells = [[_cell(v) for v in row] for row in rows]
    widths = [len(c) for c in columns]
    for row in cells:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.extend("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells)
    return lines


def render_text(report: VerificationReport) -> str:
    lines = [
        f"subject: {report.subject}",
        f"spec: {report.spec}",
        f"seed: {report.seed}",
    ]
    table = report.details.get("table")
    if table:
        lines.append("")
        lines.extend(render_table(table["columns"], table["rows"]))
    lines.append("")
    for c in report.checks:
        lines.append(f"[{c.status}] {c.name}: expected {_cell(c.expected)}, observed {_cell(c.observed)}")
    for key in sorted(report.details):
        if key == "table":
            continue
        lines.append(f"{key}: {_cell(report.details[key])}")
    lines.append("")
    lines.append(f"status: {report.status} ({len(report.checks)} checks, {report.runtime_ms} ms)")
    return "\n".join(lines) + "\n"


def load_schema() -> Dict[str, Any]:
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


def validate_report(payload: Dict[str, Any]) -> None:
    jsonschema.validate(instance=payload, schema=load_schema())


class ReportBuilder:
    """Collects checks for one report; exceptions inside ``guard`` become fail rows."""

    def __init__(self, subject: str, spec: str, seed: int = 0):
        self.subject = subject
        self.spec = spec
        self.seed = seed
        self.details: Dict[str, Any] = {}
        self._checks: List[Check] = []
        self._started = time.perf_counter()

    def claim(self, name: str, expected: Any, observed: Any) -> bool:
        """A published claim: a mismatch is a discrepancy."""
        ok = expected == observed
        self._checks.append(Check(name, expected, observed, STATUS_PASS if ok else STATUS_DISCREPANCY))
        return ok

    def fact(self, name: str, expected: Any, observed: Any) -> bool:
        """An internal invariant: a mismatch is a failure."""
        ok = expected == observed
        self._checks.append(Check(name, expected, observed, STATUS_PASS if ok else STATUS_FAIL))
        return ok

    def note(self, name: str, observed: Any) -> None:
        self._checks.append(Check(name, None, observed, STATUS_PASS))

    @contextmanager
    def guard(self, name: str) -> Iterator[None]:
        try:
            yield
        except Exception as exc:
            logger.exception("check %s crashed", name)
            self._checks.append(Check(name, None, f"{type(exc).__name__}: {exc}", STATUS_FAIL))

    def build(self, runtime_ms: Optional[int] = None) -> VerificationReport:
        if runtime_ms is None:
            runtime_ms = int((time.perf_counter() - self._started) * 1000)
        return VerificationReport(
            subject=self.subject,
            spec=self.spec,
            checks=tuple(sorted(self._checks, key=lambda c: c.name)),
            seed=self.seed,
            runtime_ms=runtime_ms,
            details=self.details,
        )
