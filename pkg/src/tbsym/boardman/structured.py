"""Symbols from the explicit generator families, level by level.

Level 0 adjoins the psi family of ``mu_{n,r}`` in blocks of ``r`` (one block
per extension, ``q_1`` of them) and then its ``r_1``-element tail.  Level
``i >= 1`` works with the local map ``mu_{r_{i-1}, r_i}``: its first block
is congruent to the previous tail, so only blocks ``1 .. q_{i+1} - 1`` and
the next tail are adjoined.  After every adjunction the corank at the
origin is measured and compared with the Euclid prediction; a mismatch is
reported as a :class:`TheoremViolation`, never patched over.

Coranks only see linear parts, and the linear part of a composite depends
only on the linear parts of its pieces, so compositions are truncated at
degree 1 unless a larger jet is requested for ideal comparisons.
"""

from __future__ import annotations

from ..mulmap import DescentTerminated, descend, euclid_symbol, top_level
from .ideal import JetSpan, corank_at_origin
from .oracle import c_ideal
from .records import ExtensionCertificate, StepRecord, TBSymbol, TheoremViolation

__all__ = ["structured_chain", "tb_symbol_structured"]


def _blocks(level):
    """``(label, polys, tags)`` for each extension contributed by this level."""
    rows, cols = level.degrees
    fam = level.family
    first = 0 if level.index == 0 else 1
    for s in range(first, level.quotient):
        idx = range(s * cols, (s + 1) * cols)
        yield f"{fam.kind} block {s}", [fam[i] for i in idx], [f"{fam.kind}_{i}" for i in idx]
    if level.tail:
        idx = range(level.quotient * cols, level.quotient * cols + level.tail)
        yield f"{fam.kind} tail", [fam[i] for i in idx], [f"{fam.kind}_{i}" for i in idx]


def structured_chain(n: int, r: int, keep_jet: int | None = None,
                     check_splice: bool = False) -> ExtensionCertificate:
    euclid = euclid_symbol(n, r)
    expected = TBSymbol(euclid.symbol)
    predicted = list(expected) + [0]
    jet = keep_jet or 1
    cert = ExtensionCertificate(n, r, "structured", f"jet {jet}", expected)
    ideal = c_ideal(n, r).truncated(jet)
    m = len(ideal.vars)

    def fail(msg):
        cert.status = "violation"
        cert.notes.append(msg)
        raise TheoremViolation(msg, cert)

    corank = corank_at_origin(ideal)
    if corank != predicted[0]:
        fail(f"initial corank {corank}, predicted {predicted[0]}")
    level = top_level(n, r, jet=jet)
    step = 0
    pending_tail = None
    while True:
        blocks = list(_blocks(level))
        splice = {}
        if check_splice and level.index >= 1 and pending_tail is not None:
            base, tail_polys = pending_tail
            fam = level.family
            span = JetSpan.of_ideal(base, jet)
            for i, p in enumerate(tail_polys):
                splice[f"{fam.kind}_{i} congruent to previous tail entry {i}"] = \
                    span.contains(fam[i] - p)
        for label, polys, tags in blocks:
            step += 1
            if label.endswith("tail"):
                pending_tail = (ideal, polys)
            rank = m - corank
            before = ideal
            ideal = ideal.extended(polys, tags)
            record = StepRecord(step, corank, len(before), m, rank, len(polys),
                                len(ideal) - len(before), jet,
                                generators=[f"{t} = {p.normalized().to_text()}"
                                            for t, p in zip(tags, polys)] if keep_jet else list(tags))
            record.membership, splice = splice, {}
            cert.steps.append(record)
            if keep_jet is not None:
                cert.ideals.append(ideal)
            corank = corank_at_origin(ideal)
            if step >= len(predicted) or corank != predicted[step]:
                want = predicted[step] if step < len(predicted) else 0
                fail(f"after {label} (step {step}) corank is {corank}, predicted {want}")
        try:
            level = descend(level)
        except DescentTerminated:
            break
    if corank != 0:
        fail(f"chain ended with corank {corank}")
    cert.symbol = TBSymbol(cert.coranks)
    return cert


def tb_symbol_structured(n: int, r: int, keep_jet: int | None = None):
    cert = structured_chain(n, r, keep_jet)
    return cert.symbol, cert

