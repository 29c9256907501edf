"""Tabular pass/fail reports shared by every verification routine."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class CheckRow:
    check: str
    where: str
    expected: str
    actual: str
    passed: bool


@dataclass
class CheckReport:
    """An ordered list of check rows with an overall verdict."""

    name: str
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> list[CheckRow]:
        return [row for row in self.rows if not row.passed]

    def add(self, check: str, where: str, expected, actual, passed: bool | None = None) -> None:
        """Append one row; when `passed` is omitted, compare the raw values exactly."""
        if passed is None:
            passed = expected == actual
        self.rows.append(CheckRow(check, where, str(expected), str(actual), bool(passed)))

    def extend(self, other: "CheckReport") -> None:
        self.rows.extend(other.rows)

    def to_rows(self) -> list[dict]:
        return [asdict(row) for row in self.rows]

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} of {len(self.rows)} rows)"
        return f"{self.name}: {status}"
