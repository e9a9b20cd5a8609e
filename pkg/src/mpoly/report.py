from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactnum import fmt


@dataclass
class Report:
    """Outcome of comparing two computation routes over an index range."""

    identity: str
    ranges: dict[str, Any] = field(default_factory=dict)
    sample: list[dict] = field(default_factory=list)
    checked: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def compare(self, index: dict, lhs: Fraction, rhs: Fraction) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.failures.append({**index, "lhs": fmt(lhs), "rhs": fmt(rhs)})
            return False
        return True

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        return self

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "ranges": self.ranges,
            "sample": self.sample,
            "pass_count": self.checked - len(self.failures),
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "passed": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity}: {self.checked - len(self.failures)}/{self.checked} agree"
        if self.skipped:
            line += f" ({self.skipped} pole cells skipped)"
        return line
