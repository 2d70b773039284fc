"""Check reports: a verdict plus the exact list of failing identity instances.

Violations are canonical so independent implementations of the same identity
can be diffed tuple-for-tuple: one entry per failing basis index, vectors as
normalized raw-value tuples, sorted by (identity name, index).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple


@dataclass(frozen=True)
class Violation:
    identity: str
    index: Tuple[int, ...]
    lhs: Tuple
    rhs: Tuple

    def __str__(self) -> str:
        return f"{self.identity}@{self.index}: lhs={self.lhs} rhs={self.rhs}"


@dataclass
class CheckReport:
    violations: Tuple[Violation, ...] = ()
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    @staticmethod
    def build(violations: Iterable[Violation], notes: Dict[str, str] | None = None) -> "CheckReport":
        vs = tuple(sorted(violations, key=lambda v: (v.identity, v.index)))
        return CheckReport(vs, dict(notes or {}))

    def merged(self, other: "CheckReport") -> "CheckReport":
        notes = dict(self.notes)
        notes.update(other.notes)
        return CheckReport.build(self.violations + other.violations, notes)

    def prefixed(self, prefix: str) -> "CheckReport":
        return CheckReport.build(
            Violation(f"{prefix}:{v.identity}", v.index, v.lhs, v.rhs) for v in self.violations
        )

    def summary(self) -> str:
        if self.ok:
            return "ok"
        head = ", ".join(str(v) for v in self.violations[:4])
        more = "" if len(self.violations) <= 4 else f" (+{len(self.violations) - 4} more)"
        return f"{len(self.violations)} violation(s): {head}{more}"
