"""Small result record shared by the numerical checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification: a named residual against a tolerance."""

    name: str
    passed: bool
    max_residual: float
    tol: float
    details: dict = field(default_factory=dict)

    def __str__(self) -> str:
        word = "ok" if self.passed else "FAIL"
        return f"{self.name}: {word} (max residual {self.max_residual:.3e}, tol {self.tol:.1e})"
