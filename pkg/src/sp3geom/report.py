"""Check records and the JSON run report shared by the suites and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath


@dataclass
class Check:
    name: str
    passed: bool
    residual: object = None  # mpf, Fraction or None
    detail: dict = field(default_factory=dict)


def _plain(x, prec):
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        x = mpmath.mpc(x)
        digits = prec or 15
        if x.imag == 0:
            return {"v": mpmath.nstr(x.real, min(digits, 15)), "prec": prec}
        return {"re": mpmath.nstr(x.real, min(digits, 15)), "im": mpmath.nstr(x.imag, min(digits, 15)), "prec": prec}
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v, prec) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v, prec) for v in x]
    return x


@dataclass
class RunReport:
    command: str
    seed: int | None = None
    precision: int | None = None
    checks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, with_time: bool = True) -> dict:
        out = {
            "command": self.command,
            "seed": self.seed,
            "precision": self.precision,
            "passed": self.passed,
            "checks": [{"name": c.name, "status": "pass" if c.passed else "fail",
                        "residual": _plain(c.residual, self.precision),
                        "witness": _plain(c.detail, self.precision)} for c in self.checks],
        }
        out.update(_plain(self.extra, self.precision))
        if with_time:
            out["wall_time"] = self.wall_time
        return out

    def to_json(self, with_time: bool = True) -> str:
        return json.dumps(self.to_dict(with_time), sort_keys=True, indent=2)
