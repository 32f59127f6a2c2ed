"""Validation reports: per-family instance counts plus every failed instance.

Reports are deterministic: failures and counts are sorted before rendering,
so the same structure produces byte-identical text regardless of worker
count or instance generation order.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

MISSING = "<missing>"


@dataclass(frozen=True)
class AxiomInstance:
    """One checked law instance: the family tag, the identifiers that
    instantiate it, and the two sides that were compared."""

    family: str
    subjects: tuple[str, ...]
    lhs: str
    rhs: str

    def key(self) -> tuple:
        return (self.family, self.subjects)

    def render(self) -> str:
        subj = ",".join(self.subjects)
        return f"fail {self.family} @ {subj} : {self.lhs} != {self.rhs}"


# An instance check: (family, subjects, thunk); the thunk returns the two
# identifiers (or None) to compare.
Check = tuple[str, tuple[str, ...], Callable[[], tuple[Optional[str], Optional[str]]]]


@dataclass
class ValidationReport:
    structure: str
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[AxiomInstance] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def total_checked(self) -> int:
        return sum(self.counts.values())

    def count(self, family: str, n: int = 1) -> None:
        self.counts[family] = self.counts.get(family, 0) + n

    def fail(self, family: str, subjects: tuple[str, ...], lhs, rhs) -> None:
        self.failures.append(
            AxiomInstance(family, subjects, lhs if lhs is not None else MISSING,
                          rhs if rhs is not None else MISSING))

    def has_failure(self, family: str, subjects: tuple[str, ...]) -> bool:
        return any(f.family == family and f.subjects == subjects for f in self.failures)

    def merge(self, other: "ValidationReport") -> None:
        for fam, n in other.counts.items():
            self.count(fam, n)
        self.failures.extend(other.failures)

    def merge_prefixed(self, other: "ValidationReport", prefix: str) -> None:
        for fam, n in other.counts.items():
            self.count(prefix + fam, n)
        for inst in other.failures:
            self.failures.append(AxiomInstance(prefix + inst.family, inst.subjects,
                                               inst.lhs, inst.rhs))

    def finish(self) -> "ValidationReport":
        self.failures.sort(key=AxiomInstance.key)
        return self

    def render(self) -> str:
        lines = [f"report {self.structure}", f"status {'PASS' if self.ok else 'FAIL'}"]
        for fam in sorted(self.counts):
            lines.append(f"checked {fam} = {self.counts[fam]}")
        for inst in sorted(self.failures, key=AxiomInstance.key):
            lines.append(inst.render())
        lines.append(f"total-checked = {self.total_checked()}")
        lines.append(f"total-failed = {len(self.failures)}")
        return "\n".join(lines) + "\n"


def run_checks(structure: str, checks: Iterable[Check], jobs: int = 1) -> ValidationReport:
    """Evaluate instance checks, optionally sharded over worker threads.

    Results are keyed and sorted, so the report does not depend on jobs.
    """
    checks = list(checks)
    report = ValidationReport(structure)

    def evaluate(shard: list[Check]) -> list[tuple[str, tuple[str, ...], object, object]]:
        out = []
        for family, subjects, thunk in shard:
            lhs, rhs = thunk()
            out.append((family, subjects, lhs, rhs))
        return out

    if jobs <= 1 or len(checks) < 2:
        results = evaluate(checks)
    else:
        shards = [checks[k::jobs] for k in range(jobs)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = [row for part in pool.map(evaluate, shards) for row in part]

    for family, subjects, lhs, rhs in results:
        report.count(family)
        if lhs is None or rhs is None or lhs != rhs:
            report.fail(family, subjects, lhs, rhs)
    return report.finish()
