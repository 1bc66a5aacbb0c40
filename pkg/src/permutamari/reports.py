"""Verdict and report types shared by the validators and verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check on raw input.

    Either valid, or carries the label of the first failing axiom ("I1", "I2",
    "E1", "E2", "I2*"), the lexicographically smallest witness for it, and a
    human-readable message.  Truthiness follows validity.
    """

    valid: bool
    axiom: str | None = None
    witness: tuple | None = None
    message: str = "ok"

    def __bool__(self) -> bool:
        return self.valid


@dataclass
class VerifyReport:
    """Structured result of a verification run, JSON-serializable for CI.

    ``checks`` maps check names to outcomes; ``witness`` carries the first
    failure (or None), ``millis`` the wall-clock time of the run.
    """

    n: int
    elements: int
    pairs_checked: int
    checks: dict[str, bool]
    witness: dict[str, Any] | None
    millis: int

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "elements": self.elements,
            "pairs_checked": self.pairs_checked,
            "checks": dict(self.checks),
            "witness": self.witness,
            "millis": self.millis,
        }
