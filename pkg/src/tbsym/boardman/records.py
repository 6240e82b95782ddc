"""Value types shared by the symbol engines and the certificate writer."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

__all__ = [
    "TBSymbol",
    "JetConfig",
    "StepRecord",
    "ExtensionCertificate",
    "CapExceeded",
    "ChainStabilized",
    "TheoremViolation",
]

TIME_BUDGET_ENV = "TB_TIME_BUDGET_SECS"


class TBSymbol(tuple):
    """Non-increasing tuple of positive coranks, trailing zeros removed."""

    def __new__(cls, entries=()):
        entries = [int(e) for e in entries]
        while entries and entries[-1] == 0:
            entries.pop()
        if any(e <= 0 for e in entries):
            raise ValueError(f"symbol entries must be positive: {entries}")
        if any(x < y for x, y in zip(entries, entries[1:])):
            raise ValueError(f"symbol must be non-increasing: {entries}")
        return super().__new__(cls, entries)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"TBSymbol({tuple(self)})"

    @classmethod
    def parse(cls, text: str) -> "TBSymbol":
        text = text.strip()
        return cls(int(x) for x in text.split(",")) if text else cls()


@dataclass(frozen=True)
class JetConfig:
    """Truncation degree for jet checks plus resource caps for the oracle.

    ``oracle_mode`` selects how the oracle forms critical extensions:
    ``"reduce"`` (default) works in adapted coordinates with exact jet
    bookkeeping, ``"minors"`` enumerates every minor symbolically, and
    ``"fast"`` enumerates minors in a fixed jet ring (labelled unsound).
    """

    degree: int = 3
    max_generators: int = 20000
    max_minors: int = 200000
    time_budget: float = 600.0
    oracle_mode: str = "reduce"

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("jet degree must be at least 1")
        if self.max_generators < 1 or self.max_minors < 1:
            raise ValueError("caps must be positive")
        if self.time_budget <= 0:
            raise ValueError("time budget must be positive")
        if self.oracle_mode not in ("reduce", "minors", "fast"):
            raise ValueError(f"unknown oracle mode {self.oracle_mode!r}")

    @classmethod
    def from_env(cls, **kwargs) -> "JetConfig":
        """Like the constructor, but ``TB_TIME_BUDGET_SECS`` overrides the time budget."""
        raw = os.environ.get(TIME_BUDGET_ENV)
        if raw:
            kwargs["time_budget"] = float(raw)
        return cls(**kwargs)

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "max_generators": self.max_generators,
            "max_minors": self.max_minors,
            "time_budget": self.time_budget,
            "oracle_mode": self.oracle_mode,
        }


@dataclass
class StepRecord:
    step: int
    corank: int
    rows: int
    cols: int
    rank: int
    candidates: int
    adjoined: int
    jet: int | None = None
    generators: list = field(default_factory=list)
    membership: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "step": self.step,
            "corank": self.corank,
            "jacobian": [self.rows, self.cols],
            "rank_at_origin": self.rank,
            "candidates": self.candidates,
            "adjoined": self.adjoined,
            "jet": self.jet,
            "generators": list(self.generators),
            "membership": {k: self.membership[k] for k in sorted(self.membership)},
        }


@dataclass
class ExtensionCertificate:
    """Record of one engine's run along the critical-extension chain."""

    n: int
    r: int
    method: str
    mode: str
    expected: TBSymbol
    steps: list = field(default_factory=list)
    symbol: TBSymbol | None = None
    status: str = "complete"
    notes: list = field(default_factory=list)
    ideals: list = field(default_factory=list, repr=False)

    @property
    def coranks(self) -> tuple:
        return tuple(s.corank for s in self.steps)

    @property
    def agrees(self) -> bool:
        return self.status == "complete" and self.symbol == self.expected

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "mode": self.mode,
            "status": self.status,
            "symbol": None if self.symbol is None else str(self.symbol),
            "agrees_with_closed_form": self.agrees,
            "steps": [s.as_dict() for s in self.steps],
            "notes": list(self.notes),
        }


class CapExceeded(RuntimeError):
    """A resource cap stopped the oracle; ``partial`` holds what was done."""

    def __init__(self, message: str, partial: ExtensionCertificate | None = None):
        super().__init__(message)
        self.partial = partial


class ChainStabilized(ValueError):
    """The corank stopped dropping, so the chain never reaches corank 0."""

    def __init__(self, message: str, partial: ExtensionCertificate | None = None):
        super().__init__(message)
        self.partial = partial


class TheoremViolation(AssertionError):
    """A measured corank contradicts the predicted symbol entry."""

    def __init__(self, message: str, certificate: ExtensionCertificate | None = None):
        super().__init__(message)
        self.certificate = certificate
