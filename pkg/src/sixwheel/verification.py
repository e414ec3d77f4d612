"""Result types shared by the brute-force verification suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Counterexample:
    """First offending pair found by a verifier, smallest (|x|, |y|, x, y) first."""

    x: int
    y: int
    expected: str
    got: str

    def __str__(self) -> str:
        return f"x={self.x} y={self.y} expected={self.expected} got={self.got}"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive check; failure is data, not an exception."""

    check: str
    limit: int
    checked: int
    passed: bool
    counterexample: Counterexample | None = None
    notes: tuple[str, ...] = ()

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.check}: {status} (limit={self.limit}, checked={self.checked})"
        if self.counterexample is not None:
            line += f"\n  counterexample: {self.counterexample}"
        for note in self.notes:
            line += f"\n  note: {note}"
        return line
