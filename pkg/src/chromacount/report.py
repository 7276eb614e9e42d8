"""Structured outcomes for verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one exhaustive or randomized check.

    A report passes exactly when ``violations`` is empty.  Violations are
    dicts carrying whatever identifies the failing instance (graph6 string,
    evaluation point, both sides of the inequality); witnesses are graph6
    strings of instances that meet a bound with equality, re-checkable on
    their own.
    """

    scope: str
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    equality_witnesses: list = field(default_factory=list)
    runtime_ms: int = 0
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if not self.violations else "fail"

    def to_dict(self) -> dict:
        return {
            "scope": self.scope,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "equality_witnesses": self.equality_witnesses,
            "runtime_ms": self.runtime_ms,
            "status": self.status,
            "details": self.details,
        }

    def summary(self) -> str:
        head = f"[{self.status.upper()}] {self.scope}"
        tail = f"checked={self.instances_checked}"
        if self.equality_witnesses:
            tail += f" equality_witnesses={len(self.equality_witnesses)}"
        if self.violations:
            tail += f" violations={len(self.violations)}"
        return f"{head}: {tail} ({self.runtime_ms} ms)"
