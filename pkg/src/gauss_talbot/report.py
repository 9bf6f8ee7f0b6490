from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of checking one identity at one parameter point (or a sweep's worst point)."""

    identity: str
    parameters: dict[str, Any]
    lhs: complex
    rhs: complex
    residual: float
    tolerance: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.residual = float(self.residual)
        self.passed = bool(self.residual < self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "parameters": self.parameters,
            "lhs": [_fmt(self.lhs.real), _fmt(self.lhs.imag)],
            "rhs": [_fmt(self.rhs.real), _fmt(self.rhs.imag)],
            "residual": _fmt(self.residual),
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def _fmt(x: float) -> float:
    return float(f"{x:.12g}")
