"""Symbolic identity checks behind the generator construction.

Each check returns a :class:`CheckResult` with status PASS, FAIL or
SKIPPED.  Matrix identities are checked exactly; congruences modulo an
ideal are checked by jet membership at a chosen degree.

Matrix conventions: rows of ``d``-type matrices run ``d_{n-1} .. d_0``,
columns run ``a_{n-1} .. a_0`` and ``b_{r-1} .. b_0``, and ``D`` is the
first ``r`` columns of ``D_hat = I + d_{n-1} L + ... + d_1 L^{n-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactlinalg import PolyMatrix, eval_matrix_origin, rank_rational
from ..mulmap import (InvariantViolation, MulMapContext, build_context, d_family,
                      descend, gamma_family, k_matrix, psi_family, sylvester_jacobian,
                      tau_family, top_level)
from ..toeplitz import LowerToeplitzSeries
from .ideal import IdealPresentation, JetSpan

__all__ = ["CheckResult", "run_identity_checks", "CHECKS"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _verdict(name, ok, detail=""):
    return CheckResult(name, "PASS" if ok else "FAIL", detail)


def _d_hat(ctx, d):
    return LowerToeplitzSeries.monic(ctx.vars, ctx.n, [d[i] for i in range(ctx.n - 1, 0, -1)])


def _grad_rows(ctx, polys):
    """``(d/da, d/db)`` matrices whose rows are the gradients of ``polys``."""
    a_cols = [ctx.a[j] for j in range(ctx.n - 1, -1, -1)]
    b_cols = [ctx.b[j] for j in range(ctx.r - 1, -1, -1)]
    return (PolyMatrix.jacobian(polys, ctx.vars, a_cols),
            PolyMatrix.jacobian(polys, ctx.vars, b_cols))


def check_toeplitz_algebra(ctx: MulMapContext, D=None) -> CheckResult:
    size = ctx.n + ctx.r + 1
    A, B = ctx.series_a(size), ctx.series_b(size)
    MA, MB = A.to_poly_matrix(), B.to_poly_matrix()
    ok = (A * B == B * A
          and MA @ MB == (A * B).to_poly_matrix()
          and MA @ A.inverse().to_poly_matrix() == PolyMatrix.identity(ctx.vars, size)
          and B * B.inverse() == LowerToeplitzSeries.identity(ctx.vars, size))
    return _verdict("toeplitz-algebra", ok, f"size {size}: AB = BA, inverses exact")


def check_jacobian_factorization(ctx: MulMapContext, D=None) -> CheckResult:
    n, r = ctx.n, ctx.r
    size = n + r + 1
    left = ctx.series_b(size).to_poly_matrix(range(n + r), range(n))
    right = ctx.series_a(size).to_poly_matrix(range(n + r), range(r))
    block = PolyMatrix(ctx.vars, [lr + rr for lr, rr in zip(left.rows, right.rows)])
    return _verdict("jacobian-factorization", sylvester_jacobian(ctx) == block,
                    "Sylvester Jacobian equals the shifted (B | A) blocks")


def check_d_derivatives(ctx: MulMapContext, D=None) -> CheckResult:
    n, r = ctx.n, ctx.r
    d = d_family(ctx)
    rows = [d[i] for i in range(n - 1, -1, -1)]
    Da, Db = _grad_rows(ctx, rows)
    Bn = ctx.series_b(n).to_poly_matrix()
    Dm = _d_hat(ctx, d).to_poly_matrix(range(n), range(r))
    ok1 = Bn @ Da == PolyMatrix.identity(ctx.vars, n)
    ok2 = (Bn @ Db + Dm).is_zero()
    return _verdict("d-derivatives", ok1 and ok2,
                    f"B*dd/da = I: {ok1}; B*dd/db + D = 0: {ok2}")


def check_toeplitz_columns(ctx: MulMapContext, D=None) -> CheckResult:
    n, r = ctx.n, ctx.r
    d = d_family(ctx)
    _, Db = _grad_rows(ctx, [d[i] for i in range(n - 1, -1, -1)])
    want = (-(ctx.series_b(n).inverse() * _d_hat(ctx, d))).to_poly_matrix(range(n), range(r))
    return _verdict("toeplitz-columns", Db == want,
                    "dd/db is the first r columns of -B^{-1} D_hat")


def _derivative_law(ctx, rows_for, factor, s_values, name):
    n, r = ctx.n, ctx.r
    d = d_family(ctx)
    Dm = _d_hat(ctx, d).to_poly_matrix(range(n), range(r))
    failed = []
    for s in s_values:
        Ma, Mb = _grad_rows(ctx, rows_for(s, d))
        if Mb != Ma.scale(-factor(s)) @ Dm:
            failed.append(s)
    if not s_values:
        return CheckResult(name, "SKIPPED", "no indices in range")
    shown = ",".join(map(str, s_values))
    if failed:
        return CheckResult(name, "FAIL", f"fails for s = {','.join(map(str, failed))}")
    return CheckResult(name, "PASS", f"s = {shown}")


def check_b0_derivative_law(ctx: MulMapContext, D=None) -> CheckResult:
    """``(d^s d_i / d b_0^{s-1} d b_j) = -s (d^s d_i / d b_0^{s-1} d a_j) D``, s = 1..q1."""
    b0 = ctx.b[0]

    def rows_for(s, d):
        out = []
        for i in range(ctx.n - 1, -1, -1):
            p = d[i]
            for _ in range(s - 1):
                p = p.derive(b0)
            out.append(p)
        return out

    q1 = ctx.n // ctx.r
    return _derivative_law(ctx, rows_for, lambda s: s, list(range(1, q1 + 1)), "b0-derivative-law")


def check_psi_derivative_law(ctx: MulMapContext, D=None) -> CheckResult:
    """``(d psi_{sr+i} / d b_j) = -(s+1) (d psi_{sr+i} / d a_j) D``, s = 0..q1-1."""
    psi = psi_family(ctx)
    r = ctx.r
    q1 = ctx.n // r
    return _derivative_law(ctx, lambda s, d: [psi[s * r + i] for i in range(r)],
                           lambda s: s + 1, list(range(q1)), "psi-derivative-law")


def _psi_ideal(ctx, count, extra=()):
    psi = psi_family(ctx)
    gens = [psi[i] for i in range(count)] + list(extra)
    return IdealPresentation(ctx.vars, gens)


def check_coefficient_vanishing(ctx: MulMapContext, D=3) -> CheckResult:
    """Top coefficients of ``B^{-s} A`` vanish modulo ``psi_0 .. psi_{sr-1}``."""
    n, r = ctx.n, ctx.r
    q1 = n // r
    size = n + r + 1
    A, Binv = ctx.series_a(size), ctx.series_b(size).inverse()
    failed = []
    power = Binv
    for s in range(1, q1 + 1):
        span = JetSpan.of_ideal(_psi_ideal(ctx, s * r), D)
        series = power * A
        for i in range(n - s * r + 1, n + r + 1):
            if not span.contains(series.coefficient(i)):
                failed.append((s, i))
        power = power * Binv
    detail = f"s = 1..{q1}, jet degree {D}"
    if failed:
        detail += "; fails at (s, i) = " + ", ".join(f"({s}, {i})" for s, i in failed)
    return _verdict("coefficient-vanishing", not failed, detail)


def check_local_coordinates(ctx: MulMapContext, D=None) -> CheckResult:
    n, r = ctx.n, ctx.r
    q1, r1 = divmod(n, r)
    if not r1:
        return CheckResult("local-coordinates", "SKIPPED", "r divides n")
    psi = psi_family(ctx)
    gamma = gamma_family(ctx)
    polys = ([psi[i] for i in range(q1 * r)] + [gamma[i] for i in range(n - r1, n)]
             + list(ctx.b))
    J = eval_matrix_origin(PolyMatrix.jacobian(polys, ctx.vars))
    rank = rank_rational(J)
    return _verdict("local-coordinates", rank == n + r,
                    f"Jacobian of psi, gamma, b at the origin has rank {rank} of {n + r}")


def check_product_congruence(ctx: MulMapContext, D=3) -> CheckResult:
    n, r = ctx.n, ctx.r
    q1, r1 = divmod(n, r)
    if not r1:
        return CheckResult("product-congruence", "SKIPPED", "r divides n")
    level = descend(top_level(n, r))
    tau = tau_family(level)
    span = JetSpan.of_ideal(_psi_ideal(ctx, q1 * r), D)
    bad = [i for i in range(n + r) if not span.contains(ctx.c[i] - tau[i])]
    detail = f"c_i - tau_i modulo psi_0..psi_{q1 * r - 1}, jet degree {D}"
    if bad:
        detail += "; fails at i = " + ",".join(map(str, bad))
    return _verdict("product-congruence", not bad, detail)


def check_k_block(ctx: MulMapContext, D=3) -> CheckResult:
    n, r = ctx.n, ctx.r
    q1, r1 = divmod(n, r)
    if not r1:
        return CheckResult("k-block", "SKIPPED", "r divides n")
    try:
        K = k_matrix(ctx)
    except InvariantViolation as exc:
        return CheckResult("k-block", "FAIL", str(exc))
    span = JetSpan.of_ideal(_psi_ideal(ctx, q1 * r), D)
    for p in K.rows[0]:
        if p.eval_origin() == 0:
            span.add_generator(p)
    bad = [(i, j) for i in range(r1) for j in range(r1)
           if K[i, j].eval_origin() != 0 or not span.contains(K[i, j])]
    detail = f"{r1}x{r1} block; entries generated by its first row and psi, jet degree {D}"
    if bad:
        detail += "; not generated: " + ", ".join(f"({i}, {j})" for i, j in bad)
    return _verdict("k-block", not bad, detail)


CHECKS = (
    check_toeplitz_algebra,
    check_jacobian_factorization,
    check_d_derivatives,
    check_toeplitz_columns,
    check_b0_derivative_law,
    check_psi_derivative_law,
    check_coefficient_vanishing,
    check_local_coordinates,
    check_product_congruence,
    check_k_block,
)


def run_identity_checks(n: int, r: int, D: int = 3) -> list:
    ctx = build_context(n, r)
    return [check(ctx, D) for check in CHECKS]
