"""The critical-extension oracle: Thom-Boardman symbols from first principles.

Nothing here knows about Euclid's algorithm or the generator families of
``mulmap``; the chain starts from the product coefficients ``c`` and only
uses Jacobian minors.

Two ways of forming an extension are provided.

``minors``
    Literal: adjoin every ``(rank + 1)``-minor of the generator Jacobian.
    Exact, but the number and size of minors explode after a few steps.

``reduce`` (default)
    If the generators' linear parts have rank ``k``, pick ``k`` generators
    and ``k`` pivot variables with an invertible linear block.  Solving those
    generators for the pivot variables (as a truncated power series in the
    remaining variables ``y``) gives coordinates ``(u, y)`` in which the
    ideal is ``(u) + G(y)``.  In these coordinates the Jacobian is block
    diagonal, so the ``(k + 1)``-minors generate the same ideal modulo
    ``(u) + G`` as the first partials ``dG/dy``.  The chain continues on
    ``G + dG/dy`` in the ``y`` variables.

Both ideals are known only modulo a power of the maximal ideal.  If the
generators are exact modulo ``m^{D+1}``, their partials are exact modulo
``m^D``, so each step costs one degree of precision.  Coranks need degree 1,
so the reduce mode deepens the starting degree until the chain reaches
corank 0 with precision to spare.
"""

from __future__ import annotations

import time
from fractions import Fraction

from ..exactlinalg import PolyMatrix, count_minors, minors
from ..mulmap import build_context, euclid_symbol
from ..polyring import VarTable
from .ideal import IdealPresentation, corank_at_origin, linear_rank
from .records import (CapExceeded, ChainStabilized, ExtensionCertificate, JetConfig,
                      StepRecord, TBSymbol)

__all__ = ["critical_extension", "oracle_chain", "tb_symbol_oracle", "c_ideal"]

UNSOUND_LABEL = "UNSOUND-FAST"
# past this starting degree a vanishing restriction is taken as exact
STABLE_JET = 32


def c_ideal(n: int, r: int) -> IdealPresentation:
    ctx = build_context(n, r)
    order = range(n + r - 1, -1, -1)
    return IdealPresentation(ctx.vars, [ctx.c[k] for k in order], [f"c{k}" for k in order])


class _Clock:
    def __init__(self, budget):
        self.deadline = time.monotonic() + budget
        self.budget = budget

    def check(self, partial=None):
        if time.monotonic() > self.deadline:
            raise CapExceeded(f"time budget of {self.budget:g}s exhausted", partial)


# -- literal minors ---------------------------------------------------------

def _extend_by_minors(ideal, caps, clock, step, jet, partial=None):
    m = len(ideal.vars)
    J = PolyMatrix.jacobian(ideal.generators, ideal.vars)
    rank = linear_rank(ideal.generators, m)
    corank = m - rank
    if corank == 0:
        raise ValueError("ideal already has corank 0; no critical extension exists")
    order = rank + 1
    rows = len(ideal)
    total = count_minors(rows, m, order) if order <= rows else 0
    if total > caps.max_minors:
        raise CapExceeded(f"step {step}: {total} minors of order {order} exceed the cap "
                          f"of {caps.max_minors}", partial)
    new, tags = [], []
    if total:
        for k, mnr in enumerate(minors(J, order, jet=jet)):
            if k % 64 == 0:
                clock.check(partial)
            if not mnr.is_zero:
                new.append(mnr.value)
                tags.append(f"minor(s{step};{','.join(map(str, mnr.rows))};"
                            f"{','.join(map(str, mnr.cols))})")
    ext = ideal.extended(new, tags)
    if len(ext) > caps.max_generators:
        raise CapExceeded(f"step {step}: {len(ext)} generators exceed the cap", partial)
    record = StepRecord(step, corank, rows, m, rank, total, len(ext) - len(ideal), jet)
    return corank, ext, record


def critical_extension(ideal: IdealPresentation, caps: JetConfig | None = None,
                       jet: int | None = None):
    """``(corank, extended ideal)``: adjoin all ``(rank + 1)``-minors of the Jacobian."""
    caps = caps or JetConfig()
    corank, ext, _ = _extend_by_minors(ideal, caps, _Clock(caps.time_budget), 1, jet)
    return corank, ext


# -- adapted coordinates ----------------------------------------------------

def _pivots(rows):
    """Indices of independent rows and one pivot column per chosen row."""
    basis = []
    chosen, cols = [], []
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for pc, b in basis:
            f = v[pc]
            if f:
                v = [x - f * y for x, y in zip(v, b)]
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            continue
        p = v[pc]
        v = [x / p for x in v]
        basis = [(q, [x - b[pc] * y for x, y in zip(b, v)]) if b[pc] else (q, b)
                 for q, b in basis]
        basis.append((pc, v))
        chosen.append(idx)
        cols.append(pc)
    return chosen, cols


def _invert(M):
    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _restrict(gens, vars: VarTable, D: int, clock, partial):
    """Solve the pivot generators and restrict the rest to the remaining variables.

    Returns ``(rank, free table, restricted generators)``; the restricted
    generators are exact modulo ``m^{D+1}`` and have no linear part.
    """
    width = len(vars)
    rows = []
    for g in gens:
        row = [0] * width
        for i, c in g.linear_coeffs().items():
            row[i] = c
        rows.append(row)
    chosen, pcols = _pivots(rows)
    k = len(chosen)
    free = [j for j in range(width) if j not in pcols]
    table = VarTable([vars.names[j] for j in free])
    A = [[rows[i][p] for p in pcols] for i in chosen]
    Ainv = _invert(A)
    rest = []
    for i in chosen:
        g = gens[i]
        lin = vars.zero()
        for p in pcols:
            if rows[i][p]:
                lin = lin + vars.var(p).scale(rows[i][p])
        rest.append(g - lin)
    phi = {p: table.zero() for p in pcols}
    for _ in range(D):
        clock.check(partial)
        vals = [h.substitute(phi, target=table, jet=D) for h in rest]
        new = {}
        for t, p in enumerate(pcols):
            acc = table.zero()
            for j, v in enumerate(vals):
                if Ainv[t][j] and v:
                    acc = acc - v.scale(Ainv[t][j])
            new[p] = acc
        if new == phi:
            break
        phi = new
    for i in chosen:
        if gens[i].substitute(phi, target=table, jet=D):
            raise AssertionError("pivot generator does not vanish on the solved branch")
    restricted = []
    skip = set(chosen)
    for i, g in enumerate(gens):
        if i in skip:
            continue
        h = g.substitute(phi, target=table, jet=D)
        if h:
            if h.linear_coeffs():
                raise AssertionError("restricted generator kept a linear part")
            restricted.append(h)
    return k, table, restricted


class _NeedPrecision(Exception):
    pass


def _reduce_chain(ideal, D0, caps, clock, cert, keep_jet, max_steps):
    top = ideal.vars
    vars = top
    gens = [g.truncate(D0) for g in ideal.generators]
    D = D0
    lifted = list(ideal.generators)
    for step in range(1, max_steps + 2):
        rank = linear_rank(gens, len(vars))
        corank = len(vars) - rank
        if corank == 0:
            return
        if step > max_steps:
            raise RuntimeError(f"chain exceeded the hard stop of {max_steps} steps")
        if D < 1 or (keep_jet is not None and D - 1 < keep_jet):
            raise _NeedPrecision
        k, table, G = _restrict(gens, vars, D, clock, cert)
        if not G:
            if D0 < STABLE_JET:
                raise _NeedPrecision
            raise ChainStabilized(f"step {step}: the ideal is smooth to order {D}; "
                                  f"corank stays {corank}", cert)
        derived = []
        for h in G:
            for j in range(len(table)):
                d = h.derive(j).truncate(D - 1)
                if d:
                    derived.append(d)
        before = IdealPresentation(table, G, jet=D - 1)
        after = before.extended(derived)
        if len(after) > caps.max_generators:
            raise CapExceeded(f"step {step}: {len(after)} generators exceed the cap", cert)
        cert.steps.append(StepRecord(step, corank, len(gens), len(vars), rank,
                                     len(G) * len(table), len(after) - len(before), D))
        gens = list(after.generators)
        vars = table
        D -= 1
        if keep_jet is not None:
            lifted += [g.lift(top) for g in gens]
            cert.ideals.append(IdealPresentation(top, lifted, jet=keep_jet))
    raise RuntimeError("unreachable")


def oracle_chain(ideal: IdealPresentation, caps: JetConfig | None = None,
                 keep_jet: int | None = None, *, max_steps: int = 50, n: int = 0, r: int = 0,
                 expected: TBSymbol = TBSymbol()) -> ExtensionCertificate:
    """Run the critical-extension chain of any ideal until corank 0.

    With ``keep_jet`` the step ideals, expressed in the original variables and
    truncated at that degree, are kept in ``certificate.ideals``.  More than
    ``max_steps`` extensions is treated as a bug and raises ``RuntimeError``;
    an ideal whose corank stops dropping raises :class:`ChainStabilized`.  A cap
    raises :class:`CapExceeded` carrying an inconclusive partial certificate.
    """
    caps = caps or JetConfig()
    clock = _Clock(caps.time_budget)
    mode = {"reduce": "reduce", "minors": "minors", "fast": UNSOUND_LABEL}[caps.oracle_mode]
    cert = ExtensionCertificate(n, r, "oracle", mode, expected)
    try:
        if caps.oracle_mode == "reduce":
            D0 = 2 + (keep_jet or 0)
            while True:
                cert.steps.clear()
                cert.ideals.clear()
                try:
                    _reduce_chain(ideal, D0, caps, clock, cert, keep_jet, max_steps)
                    break
                except _NeedPrecision:
                    D0 *= 2
            cert.notes.append(f"starting jet degree {D0}")
        else:
            jet = caps.degree if caps.oracle_mode == "fast" else None
            current = ideal if jet is None else ideal.truncated(jet)
            step = 0
            while corank_at_origin(current):
                step += 1
                if step > max_steps:
                    raise RuntimeError(f"chain exceeded the hard stop of {max_steps} steps")
                _, current, record = _extend_by_minors(current, caps, clock, step, jet, cert)
                if not record.adjoined:
                    raise ChainStabilized(f"step {step}: no new minors; corank stays "
                                          f"{record.corank}", cert)
                cert.steps.append(record)
                if keep_jet is not None:
                    cert.ideals.append(current.truncated(keep_jet))
            if jet is not None:
                cert.notes.append(f"{UNSOUND_LABEL}: minors computed modulo degree {jet + 1}")
    except (CapExceeded, ChainStabilized) as exc:
        cert.status = "inconclusive"
        cert.notes.append(str(exc))
        exc.partial = cert
        raise
    cert.symbol = TBSymbol(cert.coranks)
    return cert


def tb_symbol_oracle(n: int, r: int, caps: JetConfig | None = None,
                     keep_jet: int | None = None):
    """``(symbol, certificate)`` for ``mu_{n,r}`` by critical extensions of the c-ideal."""
    expected = TBSymbol(euclid_symbol(n, r).symbol)
    cert = oracle_chain(c_ideal(n, r), caps, keep_jet, max_steps=n + r, n=n, r=r,
                        expected=expected)
    return cert.symbol, cert

