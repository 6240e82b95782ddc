"""Assemble and serialize a cross-checked certificate for one ``(n, r)``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .. import __version__
from ..mulmap import euclid_symbol
from .identities import run_identity_checks
from .ideal import ideal_equal_mod_jet
from .oracle import tb_symbol_oracle
from .records import CapExceeded, ChainStabilized, JetConfig, TBSymbol, TheoremViolation
from .structured import structured_chain

__all__ = ["Certificate", "certify", "CONFIRMED", "PARTIAL", "VIOLATION"]

CONFIRMED, PARTIAL, VIOLATION = "CONFIRMED", "PARTIAL", "VIOLATION"


@dataclass
class Certificate:
    n: int
    r: int
    config: JetConfig
    closed: TBSymbol
    quotients: tuple
    remainders: tuple
    structured: object
    oracle: object
    jet_equality: dict
    identities: list
    verdict: str = CONFIRMED
    problems: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "tool": "tbsym",
            "version": __version__,
            "n": self.n,
            "r": self.r,
            "config": self.config.as_dict(),
            "closed_form": {
                "symbol": str(self.closed),
                "quotients": list(self.quotients),
                "remainders": list(self.remainders),
            },
            "structured": self.structured.as_dict(),
            "oracle": self.oracle.as_dict(),
            "jet_equality": self.jet_equality,
            "identities": [c.as_dict() for c in self.identities],
            "problems": list(self.problems),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def certify(n: int, r: int, config: JetConfig | None = None) -> Certificate:
    """Run closed form, structured chain, oracle, jet comparison and identities.

    Errors from the engines are folded into the verdict: VIOLATION if
    anything disagrees or fails, otherwise PARTIAL if the oracle was capped,
    otherwise CONFIRMED.
    """
    config = config or JetConfig()
    D = config.degree
    euclid = euclid_symbol(n, r)
    closed = TBSymbol(euclid.symbol)
    problems = []

    try:
        structured = structured_chain(n, r, keep_jet=D, check_splice=True)
    except TheoremViolation as exc:
        structured = exc.certificate
        problems.append(f"structured: {exc}")
    if not all(ok for s in structured.steps for ok in s.membership.values()):
        problems.append("structured: a spliced block is not congruent to the previous tail")

    capped = False
    try:
        _, oracle = tb_symbol_oracle(n, r, config, keep_jet=D)
    except CapExceeded as exc:
        oracle = exc.partial
        capped = True
    except ChainStabilized as exc:
        oracle = exc.partial
        problems.append(f"oracle: {exc}")
    if not capped and oracle.status == "complete" and not oracle.agrees:
        problems.append(f"oracle: symbol {oracle.symbol} differs from closed form {closed}")

    if oracle.status != "complete" or structured.status != "complete":
        jet_eq = {"degree": D, "status": "SKIPPED", "steps": []}
    else:
        flags = [ideal_equal_mod_jet(a, b, D)
                 for a, b in zip(structured.ideals, oracle.ideals)]
        same_length = len(structured.ideals) == len(oracle.ideals)
        ok = same_length and all(flags)
        jet_eq = {"degree": D, "status": "PASS" if ok else "FAIL", "steps": flags}
        if not ok:
            problems.append("jet equality of step ideals failed")

    identities = run_identity_checks(n, r, D)
    problems += [f"identity {c.name}: {c.detail}" for c in identities if c.status == "FAIL"]

    if problems:
        verdict = VIOLATION
    elif capped:
        verdict = PARTIAL
    else:
        verdict = CONFIRMED
    return Certificate(n, r, config, closed, euclid.quotients, euclid.remainders,
                       structured, oracle, jet_eq, identities, verdict, problems)
