"""Command-line front end.

Exit codes: 0 agreement or success, 1 mathematical disagreement, 2 usage
error, 3 resource cap reached.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .boardman import (CONFIRMED, PARTIAL, CapExceeded, ChainStabilized, JetConfig, TBSymbol,
                       TheoremViolation, certify, run_identity_checks, tb_symbol_oracle,
                       tb_symbol_structured)
from .mulmap import euclid_symbol

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
METHODS = ("closed", "structured", "oracle")
CAPPED = "CAPPED"


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    r: int | None = None
    method: str = "all"
    jet: int = 3
    max_minors: int = 200000
    time_budget: float = 600.0
    oracle_mode: str = "reduce"
    out: str | None = None
    fmt: str = "text"
    max_sum: int | None = None

    def jet_config(self) -> JetConfig:
        return JetConfig.from_env(degree=self.jet, max_minors=self.max_minors,
                                  time_budget=self.time_budget, oracle_mode=self.oracle_mode)


def _run_method(method, n, r, caps):
    """Symbol string, or ``CAPPED`` / ``VIOLATION`` when the engine stops."""
    if method == "closed":
        return str(TBSymbol(euclid_symbol(n, r).symbol))
    try:
        if method == "structured":
            sym, _ = tb_symbol_structured(n, r)
        else:
            sym, _ = tb_symbol_oracle(n, r, caps)
    except CapExceeded:
        return CAPPED
    except TheoremViolation as exc:
        cert = exc.certificate
        return "VIOLATION:" + ",".join(str(c) for c in cert.coranks) if cert else "VIOLATION"
    except ChainStabilized:
        return "VIOLATION:stabilized"
    return str(sym)


def _selected(method):
    return METHODS if method == "all" else (method,)


def _compare(results: dict):
    """Exit code and verdict word for one set of method results."""
    values = [v for v in results.values() if v not in (CAPPED, "-")]
    if len(set(values)) > 1 or any(v.startswith("VIOLATION") for v in values):
        return EXIT_DISAGREE, "DISAGREE"
    if CAPPED in results.values():
        return EXIT_CAP, "CAPPED"
    return EXIT_OK, "AGREE"


def cmd_symbol(cfg: RunConfig, out=sys.stdout) -> int:
    caps = cfg.jet_config()
    results = {m: _run_method(m, cfg.n, cfg.r, caps) for m in _selected(cfg.method)}
    code, word = _compare(results)
    if cfg.fmt == "json":
        doc = {"n": cfg.n, "r": cfg.r, "results": results}
        if len(results) > 1:
            doc["verdict"] = word
        out.write(json.dumps(doc, indent=2) + "\n")
    elif cfg.fmt == "tsv":
        out.write("method\tsymbol\n")
        for m, v in results.items():
            out.write(f"{m}\t{v}\n")
    else:
        for v in results.values():
            out.write(v + "\n")
        if len(results) > 1:
            out.write(word + "\n")
    return code


def table_pairs(max_sum: int):
    """Pairs ``n >= r >= 1`` with ``n + r <= max_sum``, ordered by ``(n + r, n)``."""
    return [(s - r, r) for s in range(2, max_sum + 1)
            for r in range((s // 2), 0, -1)]


def cmd_table(cfg: RunConfig, out=sys.stdout) -> int:
    caps = cfg.jet_config()
    chosen = _selected(cfg.method)
    out.write("n\tr\tclosed\tstructured\toracle\tverdict\n")
    worst = EXIT_OK
    for n, r in table_pairs(cfg.max_sum):
        results = {m: (_run_method(m, n, r, caps) if m in chosen else "-") for m in METHODS}
        code, word = _compare(results)
        if code == EXIT_DISAGREE or (code == EXIT_CAP and worst == EXIT_OK):
            worst = code
        out.write(f"{n}\t{r}\t{results['closed']}\t{results['structured']}\t"
                  f"{results['oracle']}\t{word}\n")
    return worst


def cmd_certify(cfg: RunConfig, out=sys.stdout) -> int:
    cert = certify(cfg.n, cfg.r, cfg.jet_config())
    text = cert.to_json()
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"cannot write {cfg.out}: {exc}\n")
            return EXIT_USAGE
        out.write(f"{cert.verdict}\n")
    else:
        out.write(text)
    if cert.verdict == CONFIRMED:
        return EXIT_OK
    return EXIT_CAP if cert.verdict == PARTIAL else EXIT_DISAGREE


def cmd_verify_lemmas(cfg: RunConfig, out=sys.stdout) -> int:
    results = run_identity_checks(cfg.n, cfg.r, cfg.jet)
    if cfg.fmt == "json":
        out.write(json.dumps([c.as_dict() for c in results], indent=2) + "\n")
    else:
        for c in results:
            out.write(f"{c.name}\t{c.status}\t{c.detail}\n")
    return EXIT_OK if all(c.passed for c in results) else EXIT_DISAGREE


COMMANDS = {
    "symbol": cmd_symbol,
    "table": cmd_table,
    "certify": cmd_certify,
    "verify-lemmas": cmd_verify_lemmas,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tbsym", description=(
        "Thom-Boardman symbols of the polynomial multiplication map mu_{n,r}."))
    p.add_argument("--version", action="version", version=f"tbsym {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, method=True):
        if method:
            sp.add_argument("--method", choices=METHODS + ("all",), default="all")
        sp.add_argument("--jet", type=int, default=3, help="jet degree D for membership checks")
        sp.add_argument("--max-minors", type=int, default=200000)
        sp.add_argument("--time-budget", type=float, default=600.0,
                        help="seconds; TB_TIME_BUDGET_SECS overrides")
        sp.add_argument("--oracle-mode", choices=("reduce", "minors", "fast"), default="reduce")
        sp.add_argument("--format", dest="fmt", choices=("text", "tsv", "json"), default="text")

    sp = sub.add_parser("symbol", help="print the symbol of mu_{n,r}")
    sp.add_argument("n", type=int)
    sp.add_argument("r", type=int)
    common(sp)

    sp = sub.add_parser("table", help="TSV table over all pairs with n + r <= S")
    sp.add_argument("--max-sum", type=int, required=True)
    common(sp)

    sp = sub.add_parser("certify", help="write a JSON certificate")
    sp.add_argument("n", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("--out", default=None)
    common(sp, method=False)

    sp = sub.add_parser("verify-lemmas", help="run the symbolic identity checks")
    sp.add_argument("n", type=int)
    sp.add_argument("r", type=int)
    common(sp, method=False)
    return p


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    n, r = getattr(args, "n", None), getattr(args, "r", None)
    if n is not None and not (n >= r >= 1):
        parser.error(f"degrees must satisfy n >= r >= 1 (got n={n}, r={r})")
    if args.command == "table" and args.max_sum < 2:
        parser.error("--max-sum must be at least 2")
    if args.jet < 1:
        parser.error("--jet must be at least 1")
    if args.max_minors < 1 or args.time_budget <= 0:
        parser.error("caps must be positive")
    return RunConfig(command=args.command, n=n, r=r, method=getattr(args, "method", "all"),
                     jet=args.jet, max_minors=args.max_minors, time_budget=args.time_budget,
                     oracle_mode=args.oracle_mode, out=getattr(args, "out", None),
                     fmt=args.fmt, max_sum=getattr(args, "max_sum", None))


def main(argv=None) -> int:
    cfg = parse_config(argv)
    return COMMANDS[cfg.command](cfg, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
