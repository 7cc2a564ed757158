"""Result type for the exhaustive identity sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)

    def record(self, ok: bool, **instance: Any) -> bool:
        """Count one instance; keep the first failing one."""
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = instance
        return ok

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} instances)"
        if self.counterexample is not None:
            line += f"; first counterexample {self.counterexample}"
        return line
