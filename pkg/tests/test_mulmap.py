import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tbsym.exactlinalg import PolyMatrix, eval_matrix_origin, rank_rational
from tbsym.mulmap import (DescentTerminated, alpha_family, beta_family, build_context,
                          d_family, d_negative, descend, euclid_symbol, gamma_family, k_matrix,
                          psi_family, sylvester_jacobian, tau_family, top_level)
from tbsym.toeplitz import LowerToeplitzSeries


def pairs(max_sum):
    return [(s - r, r) for s in range(2, max_sum + 1) for r in range(1, s // 2 + 1)]


def texts(polys):
    return [p.to_text() for p in polys]


def test_small_products():
    ctx = build_context(1, 1)
    assert texts(ctx.c) == ["a0*b0", "a0 + b0"]
    ctx = build_context(2, 2)
    assert texts(ctx.c[::-1]) == ["a1 + b1", "a0 + b0 + a1*b1", "a1*b0 + a0*b1", "a0*b0"]


def test_top_coefficient():
    for n, r in pairs(9):
        ctx = build_context(n, r)
        assert ctx.c[n + r - 1] == ctx.a[n - 1] + ctx.b[r - 1]


def test_degrees_must_be_ordered():
    with pytest.raises(ValueError):
        build_context(3, 5)
    with pytest.raises(ValueError):
        euclid_symbol(2, 0)


def poly_product(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, u in enumerate(f):
        for j, v in enumerate(g):
            out[i + j] += u * v
    return out


def test_coefficients_match_numeric_products():
    rng = random.Random(7)
    for n, r in [(3, 2), (5, 3), (4, 4), (6, 1)]:
        ctx = build_context(n, r)
        for _ in range(25):
            a = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
            b = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(r)]
            point = {f"a{i}": a[i] for i in range(n)} | {f"b{j}": b[j] for j in range(r)}
            prod = poly_product(a + [1], b + [1])
            assert [c.evaluate(point) for c in ctx.c] == prod[:-1]


def test_sylvester_jacobian():
    ctx = build_context(1, 1)
    a0, b0 = ctx.a[0], ctx.b[0]
    assert sylvester_jacobian(ctx) == PolyMatrix(ctx.vars, [[1, 1], [b0, a0]])
    for n, r in pairs(10):
        J = eval_matrix_origin(sylvester_jacobian(build_context(n, r)))
        assert rank_rational(J) == n


def test_euclid_examples():
    assert euclid_symbol(4, 4).symbol == (4,)
    assert euclid_symbol(5, 3).symbol == (3, 2, 1, 1)
    assert euclid_symbol(4, 2).symbol == (2, 2)
    e = euclid_symbol(11, 5)
    assert e.quotients == (2, 5) and e.remainders == (1,)
    assert e.chain == (11, 5, 1, 0)


@given(st.integers(1, 60), st.integers(1, 60))
def test_euclid_invariants(a, b):
    n, r = max(a, b), min(a, b)
    e = euclid_symbol(n, r)
    sym = e.symbol
    assert len(sym) == sum(e.quotients)
    assert sym[0] == r and sym[-1] == gcd(n, r)
    assert all(u >= v for u, v in zip(sym, sym[1:]))
    chain = e.chain
    for i, q in enumerate(e.quotients):
        assert chain[i] == q * chain[i + 1] + chain[i + 2]


def test_d_examples():
    ctx = build_context(2, 2)
    d = d_family(ctx)
    a0, a1 = ctx.a
    b0, b1 = ctx.b
    assert d[1] == a1 - b1
    assert d[0] == a0 - b0 - (a1 - b1) * b1
    ctx = build_context(2, 1)
    a0, a1 = ctx.a
    (b0,) = ctx.b
    d = d_family(ctx)
    assert d[1] == a1 - b0 and d[0] == a0 - (a1 - b0) * b0


def test_d_recursion_and_series_agree_up_to_ten():
    # d_family raises InvariantViolation if either check fails
    for n, r in pairs(10):
        assert len(d_family(build_context(n, r))) == n


def test_negative_d_relations():
    ctx = build_context(4, 2)
    d = d_family(ctx)
    neg = d_negative(ctx)
    b0, b1 = ctx.b
    assert neg[0] + b1 * d[0] + b0 * d[1] == 0
    assert neg[1] + b1 * neg[0] + b0 * d[0] == 0


def test_psi_shape():
    for n, r in pairs(9):
        ctx = build_context(n, r)
        q1, r1 = divmod(n, r)
        psi = psi_family(ctx)
        d = d_family(ctx)
        assert len(psi) == q1 * r + r1
        assert [psi[i] for i in range(r)] == [d[i] for i in range(r)]
    assert len(psi_family(build_context(2, 2))) == 2


def test_psi_tail_from_beta():
    ctx = build_context(3, 2)
    psi = psi_family(ctx)
    alpha = alpha_family(ctx)
    series = LowerToeplitzSeries.monic(ctx.vars, 3, [alpha[2], alpha[1]]).inverse()
    assert psi[2] == series.coefficient(2) == beta_family(ctx)[1]


def test_gamma_identities():
    for n, r in pairs(9):
        ctx = build_context(n, r)
        gamma = gamma_family(ctx)
        if n // r == 1:
            d = d_family(ctx)
            assert list(gamma) == [d[i] for i in range(1, n)]
        G = LowerToeplitzSeries.monic(ctx.vars, n, [gamma[i] for i in range(n - 1, 0, -1)])
        assert ctx.series_b(n).power(n // r) * G == ctx.series_a(n)


def test_descent_from_three_two():
    level = descend(top_level(3, 2))
    assert level.index == 1 and level.degrees == (2, 1)
    g_coeffs, f2_coeffs = level.factor_coefficients()
    top = level.top
    assert g_coeffs == list(top.b)
    assert f2_coeffs == [gamma_family(top)[2]]
    with pytest.raises(DescentTerminated):
        descend(level)


def test_descent_not_needed_when_r_divides_n():
    with pytest.raises(DescentTerminated):
        descend(top_level(4, 2))
    with pytest.raises(DescentTerminated):
        tau_family(top_level(5, 3))


def test_tau_leading_coefficient():
    level = descend(top_level(5, 3))
    tau = tau_family(level)
    assert len(tau) == 8
    ctx = level.top
    assert tau[7] == gamma_family(ctx)[4] + 2 * ctx.b[2]


def test_k_block_shape_checked():
    K = k_matrix(build_context(5, 3))
    assert K.shape == (2, 2)
    with pytest.raises(DescentTerminated):
        k_matrix(build_context(4, 2))


def test_deep_descent_reexpressed_in_top_variables():
    level = top_level(11, 5, jet=2)
    level = descend(level)
    assert level.degrees == (5, 1)
    for p in level.family:
        assert p.vars == level.top.vars
        assert p.degree() <= 2
