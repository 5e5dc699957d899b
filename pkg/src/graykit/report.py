"""Deterministic pass/fail reports produced by every checker.

A report lists each axiom instance that was checked and every failure with
enough context to locate it.  Two runs on equal inputs produce byte-identical
reports: failures are kept in the (deterministic) order they were found and
serialisation uses a fixed key order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    axiom: str
    instance: str
    lhs: str
    rhs: str


@dataclass
class Report:
    check: str
    subject: str
    instances_checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def count(self, n: int = 1) -> None:
        self.instances_checked += n

    def require(self, axiom: str, instance, lhs, rhs) -> bool:
        """Record one axiom instance; returns True when lhs == rhs."""
        self.instances_checked += 1
        if lhs != rhs:
            self.failures.append(
                Failure(axiom, _key(instance), repr(lhs), repr(rhs)))
            return False
        return True

    def fail(self, axiom: str, instance, detail: str = "") -> None:
        self.instances_checked += 1
        self.failures.append(Failure(axiom, _key(instance), detail, ""))

    def merge(self, other: "Report") -> "Report":
        self.instances_checked += other.instances_checked
        self.failures.extend(other.failures)
        return self

    def to_json(self) -> str:
        doc = {
            "check": self.check,
            "subject": self.subject,
            "instances_checked": self.instances_checked,
            "failures": [
                {"axiom": f.axiom, "instance": f.instance,
                 "lhs": f.lhs, "rhs": f.rhs}
                for f in self.failures
            ],
            "status": self.status,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"[{self.status}] {self.check}: {self.subject} "
                 f"({self.instances_checked} instances)"]
        for f in self.failures:
            lines.append(f"  {f.axiom} at {f.instance}")
            if f.lhs or f.rhs:
                lines.append(f"    lhs={f.lhs}")
                lines.append(f"    rhs={f.rhs}")
        return "\n".join(lines)


def _key(instance) -> str:
    if isinstance(instance, str):
        return instance
    if isinstance(instance, (tuple, list)):
        return "(" + ",".join(_key(x) for x in instance) + ")"
    return str(instance)


def export_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return report.to_text()
    raise ValueError(f"unknown report format {fmt!r}")
