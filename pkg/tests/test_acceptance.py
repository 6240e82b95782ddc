"""The acceptance suite: one test per criterion, summarized at the end of the run."""

import random
import time
from fractions import Fraction

from tbsym.boardman import (JetConfig, ideal_equal_mod_jet, structured_chain, tb_symbol_oracle,
                            tb_symbol_structured)
from tbsym.boardman.identities import check_b0_derivative_law, check_d_derivatives
from tbsym.exactlinalg import eval_matrix_origin, rank_rational
from tbsym.mulmap import (_d_recursion, _quotient_series, build_context, euclid_symbol,
                          sylvester_jacobian)
from tbsym.polyring import VarTable
from tbsym.toeplitz import LowerToeplitzSeries


def pairs(max_sum):
    return [(s - r, r) for s in range(2, max_sum + 1) for r in range(1, s // 2 + 1)]


def test_criterion_1():
    """1: oracle symbol equals the Euclid tuple for n+r <= 8 within 10 minutes"""
    start = time.monotonic()
    for n, r in pairs(8):
        sym, cert = tb_symbol_oracle(n, r)
        assert sym == euclid_symbol(n, r).symbol, (n, r)
        assert cert.status == "complete"
    assert time.monotonic() - start < 600


def test_criterion_2():
    """2: structured symbol equals the Euclid tuple for n+r <= 16 within 2 minutes"""
    start = time.monotonic()
    for n, r in pairs(16):
        assert tb_symbol_structured(n, r)[0] == euclid_symbol(n, r).symbol, (n, r)
    assert time.monotonic() - start < 120


def test_criterion_3():
    """3: Sylvester Jacobian at the origin has corank r for n+r <= 24"""
    for n, r in pairs(24):
        M = eval_matrix_origin(sylvester_jacobian(build_context(n, r)))
        assert M.ncols - rank_rational(M) == r, (n, r)


def test_criterion_4():
    """4: oracle gives (n) in exactly one step when n = r <= 4"""
    for n in range(1, 5):
        for mode in ("reduce", "minors"):
            sym, cert = tb_symbol_oracle(n, n, JetConfig(oracle_mode=mode))
            assert sym == (n,)
            assert len(cert.steps) == 1


def test_criterion_5():
    """5: 200+ seeded unitriangular series commute and invert exactly"""
    rng = random.Random(20240611)
    table = VarTable(["x", "y"])
    x, y = table.gens()
    pool = [table.const(Fraction(rng.randint(-9, 9), rng.randint(1, 5))) for _ in range(6)]
    pool += [x, y, x * y - 2, x * x + Fraction(1, 3) * y]
    checked = 0
    for _ in range(220):
        size = rng.randint(1, 7)
        V = LowerToeplitzSeries.monic(table, size, [rng.choice(pool) for _ in range(size - 1)])
        W = LowerToeplitzSeries.monic(table, size, [rng.choice(pool) for _ in range(size - 1)])
        ident = LowerToeplitzSeries.identity(table, size)
        assert V * W == W * V
        assert V * V.inverse() == ident and V.inverse() * V == ident
        checked += 1
    assert checked >= 200


def test_criterion_6():
    """6: d-derivative identities and the b0-derivative law hold for n+r <= 8"""
    for n, r in pairs(8):
        ctx = build_context(n, r)
        assert check_d_derivatives(ctx).status == "PASS", (n, r)
        law = check_b0_derivative_law(ctx)
        assert law.status == "PASS", (n, r, law.detail)
        assert law.detail == "s = " + ",".join(str(s) for s in range(1, n // r + 1))


def test_criterion_7():
    """7: oracle and structured step ideals agree modulo degree-4 terms for n+r <= 6"""
    D = 3
    for n, r in pairs(6):
        oracle = tb_symbol_oracle(n, r, keep_jet=D)[1]
        structured = structured_chain(n, r, keep_jet=D)
        assert len(oracle.ideals) == len(structured.ideals) == len(oracle.steps)
        for a, b in zip(oracle.ideals, structured.ideals):
            assert ideal_equal_mod_jet(a, b, D), (n, r)


def test_criterion_8():
    """8: d-family recursion and series quotient agree for n+r <= 10"""
    for n, r in pairs(10):
        ctx = build_context(n, r)
        rec = _d_recursion(ctx)
        series = _quotient_series(ctx)
        for j in range(1, n + 1):
            assert rec[n - j] == series.coefficient(j), (n, r, j)


def test_criterion_9(tmp_path):
    """9: certify output is byte-identical across two runs for (3,2) and (4,2)"""
    from tbsym.cli import main

    for n, r in [(3, 2), (4, 2)]:
        outs = []
        for k in range(2):
            path = tmp_path / f"{n}_{r}_{k}.json"
            assert main(["certify", str(n), str(r), "--out", str(path)]) == 0
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]
