"""The multiplication map of monic polynomials and its generator families.

For ``f = x^n + a_{n-1} x^{n-1} + ... + a_0`` and
``g = x^r + b_{r-1} x^{r-1} + ... + b_0`` the map sends ``(a, b)`` to the
coefficients ``c`` of ``f*g``.  In shift-matrix language the reversed
polynomials become lower Toeplitz series

    A = I + a_{n-1} L + ... + a_0 L^n,   B = I + b_{r-1} L + ... + b_0 L^r,

and most families below are coefficients of products and quotients of A
and B.  Indexing follows the convention that a subscript ``i`` belongs to
the coefficient of ``L^{n-i}`` in an n x n series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .exactlinalg import PolyMatrix
from .polyring import MultiPoly, VarTable
from .toeplitz import LowerToeplitzSeries

__all__ = [
    "InvariantViolation",
    "DescentTerminated",
    "EuclidData",
    "MulMapContext",
    "GeneratorFamily",
    "DescentLevel",
    "euclid_symbol",
    "build_context",
    "sylvester_jacobian",
    "d_family",
    "d_negative",
    "alpha_family",
    "beta_family",
    "gamma_family",
    "psi_family",
    "k_matrix",
    "top_level",
    "descend",
    "tau_family",
]


class InvariantViolation(AssertionError):
    """Two independent computations of the same quantity disagree."""


class DescentTerminated(ValueError):
    """The Euclidean chain has ended; there is no further level."""


# -- Euclid -----------------------------------------------------------------

@dataclass(frozen=True)
class EuclidData:
    n: int
    r: int
    quotients: tuple  # q_1 .. q_{k+1}
    remainders: tuple  # r_1 .. r_k (all positive)

    @property
    def chain(self) -> tuple:
        """``(n, r, r_1, ..., r_k, 0)``."""
        return (self.n, self.r) + self.remainders + (0,)

    @property
    def symbol(self) -> tuple:
        out = []
        for q, rem in zip(self.quotients, self.chain[1:]):
            out.extend([rem] * q)
        return tuple(out)

    @property
    def depth(self) -> int:
        return len(self.quotients)


def _check_degrees(n, r):
    if not (isinstance(n, int) and isinstance(r, int)):
        raise TypeError("degrees must be integers")
    if r < 1 or n < r:
        raise ValueError(f"degrees must satisfy n >= r >= 1, got n={n}, r={r}")


def euclid_symbol(n: int, r: int) -> EuclidData:
    _check_degrees(n, r)
    quots, rems = [], []
    a, b = n, r
    while b:
        q, rem = divmod(a, b)
        quots.append(q)
        if rem:
            rems.append(rem)
        a, b = b, rem
    return EuclidData(n, r, tuple(quots), tuple(rems))


# -- contexts ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MulMapContext:
    """Coefficients of ``mu_{n,r}`` over a variable table.

    ``a[i]`` is ``a_i``, ``b[j]`` is ``b_j`` and ``c[j]`` is ``c_j``.
    """

    n: int
    r: int
    vars: VarTable
    a: tuple
    b: tuple
    c: tuple

    @property
    def columns(self) -> list:
        """Variable order used by every Jacobian: a_{n-1}..a_0, b_{r-1}..b_0."""
        return [self.vars.index(p) for p in self.a[::-1] + self.b[::-1]]

    @property
    def euclid(self) -> EuclidData:
        return euclid_symbol(self.n, self.r)

    def series_a(self, size: int) -> LowerToeplitzSeries:
        return LowerToeplitzSeries.monic(self.vars, size, self.a[::-1])

    def series_b(self, size: int) -> LowerToeplitzSeries:
        return LowerToeplitzSeries.monic(self.vars, size, self.b[::-1])


def build_context(n: int, r: int, a_name="a", b_name="b") -> MulMapContext:
    _check_degrees(n, r)
    names = [f"{a_name}{i}" for i in range(n - 1, -1, -1)]
    names += [f"{b_name}{j}" for j in range(r - 1, -1, -1)]
    vars = VarTable(names)
    a = tuple(vars.var(f"{a_name}{i}") for i in range(n))
    b = tuple(vars.var(f"{b_name}{j}") for j in range(r))
    c = [None] * (n + r)
    for j in range(1, n + r + 1):
        k = n + r - j
        acc = vars.zero()
        if j <= n:
            acc = acc + a[n - j]
        if j <= r:
            acc = acc + b[r - j]
        for i in range(n):
            if 0 <= k - i < r:
                acc = acc + a[i] * b[k - i]
        c[k] = acc
    return MulMapContext(n, r, vars, a, b, tuple(c))


def _local_context(n, r, a_name, b_name):
    """Context whose variables are named ``{a_name}_{i}`` / ``{b_name}_{j}``."""
    return build_context(n, r, a_name + "_", b_name + "_")


def sylvester_jacobian(ctx: MulMapContext) -> PolyMatrix:
    rows = [ctx.c[k] for k in range(ctx.n + ctx.r - 1, -1, -1)]
    return PolyMatrix.jacobian(rows, ctx.vars, ctx.columns)


# -- generator families -----------------------------------------------------

@dataclass(frozen=True)
class GeneratorFamily:
    """Polynomials indexed by consecutive subscripts starting at ``start``."""

    kind: str
    polys: tuple
    start: int = 0

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.polys[slice(
                None if i.start is None else i.start - self.start,
                None if i.stop is None else i.stop - self.start,
                i.step)]
        k = i - self.start
        if not 0 <= k < len(self.polys):
            raise IndexError(f"{self.kind}_{i} is outside the family")
        return self.polys[k]

    @property
    def indices(self):
        return range(self.start, self.start + len(self.polys))


def _coefficient_family(kind, series: LowerToeplitzSeries, n: int) -> GeneratorFamily:
    """Subscripts 1..n-1 of an n x n unitriangular series."""
    return GeneratorFamily(kind, tuple(series.coefficient(n - i) for i in range(1, n)), start=1)


def _d_recursion(ctx):
    n, r, a, b = ctx.n, ctx.r, ctx.a, ctx.b
    d = {}
    for j in range(1, n + 1):
        acc = a[n - j]
        if j <= r:
            acc = acc - b[r - j]
        for i in range(1, j):
            k = j - i
            if k <= r:
                acc = acc - d[n - i] * b[r - k]
        d[n - j] = acc
    return d


def _quotient_series(ctx) -> LowerToeplitzSeries:
    size = ctx.n + ctx.r + 1
    return ctx.series_b(size).inverse().mul(ctx.series_a(size))


def d_family(ctx: MulMapContext) -> GeneratorFamily:
    """``d_0 .. d_{n-1}``, by recursion and by series division, cross-checked."""
    rec = _d_recursion(ctx)
    D = _quotient_series(ctx)
    for j in range(1, ctx.n + 1):
        if D.coefficient(j) != rec[ctx.n - j]:
            raise InvariantViolation(f"d_{ctx.n - j}: recursion and series quotient differ")
    neg = d_negative(ctx, D)
    full = dict(rec)
    full[ctx.n] = ctx.vars.one()
    full.update({-j: neg[j - 1] for j in range(1, ctx.r + 1)})
    for j in range(1, ctx.r + 1):
        acc = full[-j]
        for k in range(1, ctx.r + 1):
            acc = acc + ctx.b[ctx.r - k] * full[-j + k]
        if acc:
            raise InvariantViolation(f"negative-index relation fails at j={j}")
    return GeneratorFamily("d", tuple(rec[i] for i in range(ctx.n)))


def d_negative(ctx: MulMapContext, D: LowerToeplitzSeries | None = None) -> tuple:
    """``d_{-1} .. d_{-r}``: coefficients of ``L^{n+1} .. L^{n+r}`` in B^{-1} A."""
    if D is None:
        D = _quotient_series(ctx)
    return tuple(D.coefficient(ctx.n + j) for j in range(1, ctx.r + 1))


def _d_hat(ctx, d: GeneratorFamily) -> LowerToeplitzSeries:
    return LowerToeplitzSeries.monic(ctx.vars, ctx.n, [d[i] for i in range(ctx.n - 1, 0, -1)])


def alpha_family(ctx: MulMapContext, d: GeneratorFamily | None = None) -> GeneratorFamily:
    """Coefficients of ``B^{-q1} D_hat`` (n x n)."""
    d = d or d_family(ctx)
    q1 = ctx.n // ctx.r
    series = ctx.series_b(ctx.n).power(-q1).mul(_d_hat(ctx, d))
    return _coefficient_family("alpha", series, ctx.n)


def beta_family(ctx: MulMapContext, alpha: GeneratorFamily | None = None) -> GeneratorFamily:
    """Coefficients of the inverse of ``I + alpha_{n-1} L + ... + alpha_1 L^{n-1}``."""
    alpha = alpha or alpha_family(ctx)
    n = ctx.n
    series = LowerToeplitzSeries.monic(ctx.vars, n, [alpha[i] for i in range(n - 1, 0, -1)])
    return _coefficient_family("beta", series.inverse(), n)


def gamma_family(ctx: MulMapContext, d: GeneratorFamily | None = None) -> GeneratorFamily:
    """Coefficients of ``B^{-(q1-1)} D_hat``, which equals ``B^{-q1} A`` mod ``L^n``."""
    d = d or d_family(ctx)
    q1 = ctx.n // ctx.r
    series = ctx.series_b(ctx.n).power(-(q1 - 1)).mul(_d_hat(ctx, d))
    return _coefficient_family("gamma", series, ctx.n)


def psi_family(ctx: MulMapContext) -> GeneratorFamily:
    """The ``q1*r + r1`` generators adjoined along the first ``q1 + 1`` extensions.

    Block ``s = 0`` is ``d_0 .. d_{r-1}``; block ``s >= 1`` holds
    ``d^s d_{r-1} / d b_0^{s-1} d b_{r-1-i}``; the tail (only when r does not
    divide n) holds ``beta_{n-r+i}`` for ``i < r1``.
    """
    n, r = ctx.n, ctx.r
    q1, r1 = divmod(n, r)
    d = d_family(ctx)
    b0 = ctx.b[0]
    polys = [d[i] for i in range(r)]
    top = d[r - 1]
    for s in range(1, q1):
        for i in range(r):
            p = top.derive(ctx.b[r - 1 - i])
            for _ in range(s - 1):
                p = p.derive(b0)
            polys.append(p)
    if r1:
        beta = beta_family(ctx, alpha_family(ctx, d))
        polys.extend(beta[n - r + i] for i in range(r1))
    return GeneratorFamily("psi", tuple(polys))


def k_matrix(ctx: MulMapContext) -> PolyMatrix:
    """The r1 x r1 block K together with a check of the surrounding shape.

    ``Phi^{-1} (0, I_r) L^{(q1-1) r} B^{-q1} D_hat (I_r; 0)`` must look like
    ``[[*, I_{r-r1}], [K, 0]]``; anything else raises ``InvariantViolation``.
    """
    n, r = ctx.n, ctx.r
    q1, r1 = divmod(n, r)
    if not r1:
        raise DescentTerminated("K is only defined when r does not divide n")
    d = d_family(ctx)
    alpha = alpha_family(ctx, d)
    shift = LowerToeplitzSeries(ctx.vars, n, [0] * ((q1 - 1) * r) + [1])
    M = shift.mul(ctx.series_b(n).power(-q1)).mul(_d_hat(ctx, d))
    block = M.to_poly_matrix(range(n - r, n), range(r))
    phi = LowerToeplitzSeries.monic(ctx.vars, r, [alpha[i] for i in range(n - 1, n - r, -1)])
    X = phi.inverse().to_poly_matrix() @ block
    for i in range(r):
        for j in range(r1, r):
            want = 1 if (i < r - r1 and j - r1 == i) else 0
            if X[i, j] != want:
                raise InvariantViolation(f"unexpected entry at ({i}, {j}) around K")
    return X.submatrix(range(r - r1, r), range(r1))


# -- descent ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DescentLevel:
    """Level ``i`` of the descent: the pair ``(f_i, f_{i+1})``.

    ``local`` is a context for ``mu_{r_{i-1}, r_i}`` over fresh variables;
    ``embedding`` sends each local variable to its expression in the
    top-level variables.  At level 0 the embedding is the identity.
    """

    index: int
    euclid: EuclidData
    top: MulMapContext
    local: MulMapContext
    embedding: dict = field(repr=False)
    jet: int | None = None

    @property
    def degrees(self) -> tuple:
        ch = self.euclid.chain
        return (ch[self.index], ch[self.index + 1])

    @property
    def quotient(self) -> int:
        return self.euclid.quotients[self.index]

    @property
    def tail(self) -> int:
        return self.euclid.chain[self.index + 2]

    def to_top(self, p: MultiPoly) -> MultiPoly:
        if self.index == 0:
            return p if self.jet is None else p.truncate(self.jet)
        return p.substitute(self.embedding, target=self.top.vars, jet=self.jet)

    @cached_property
    def family(self) -> GeneratorFamily:
        """This level's psi-type family, expressed in top-level variables."""
        fam = psi_family(self.local)
        kind = "psi" if self.index == 0 else f"phi{self.index}"
        return GeneratorFamily(kind, tuple(self.to_top(p) for p in fam))

    def factor_coefficients(self):
        """Coefficients (low to high, monic term omitted) of f_i and f_{i+1} in top variables."""
        return ([self.to_top(p) for p in self.local.a], [self.to_top(p) for p in self.local.b])


def top_level(n: int, r: int, jet: int | None = None) -> DescentLevel:
    ctx = build_context(n, r)
    ident = {i: ctx.vars.var(i) for i in range(len(ctx.vars))}
    return DescentLevel(0, euclid_symbol(n, r), ctx, ctx, ident, jet)


def descend(level: DescentLevel) -> DescentLevel:
    """Next level: ``(f_{i+1}, f_{i+2})`` where f_{i+2} comes from gamma."""
    nxt = level.tail
    if nxt == 0:
        raise DescentTerminated(f"Euclid chain ends after level {level.index}")
    local = level.local
    gamma = gamma_family(local)
    i = level.index + 1
    new = _local_context(local.r, nxt, f"f{i}", f"f{i + 1}")
    emb = {}
    for k in range(local.r):
        emb[new.a[k].as_variable()] = level.to_top(local.b[k])
    for k in range(nxt):
        emb[new.b[k].as_variable()] = level.to_top(gamma[local.n - nxt + k])
    return DescentLevel(i, level.euclid, level.top, new, emb, level.jet)


def tau_family(level: DescentLevel) -> GeneratorFamily:
    """Coefficients ``tau_0 .. tau_{N-1}`` of ``f_{i+1} * f_i^{q_i + 1}`` in top variables.

    At level 1 this is ``h_1 g^{q1}`` and is congruent to the product
    coefficients ``c`` modulo the first ``q1 * r`` psi generators.
    """
    if level.index < 1:
        raise DescentTerminated("tau needs a descent level (index >= 1)")
    ch = level.euclid.chain
    size = ch[level.index - 1] + ch[level.index] + 1
    q = level.euclid.quotients[level.index - 1]
    loc = level.local
    T = loc.series_b(size).mul(loc.series_a(size).power(q + 1))
    return GeneratorFamily("tau", tuple(level.to_top(T.coefficient(size - 1 - k))
                                        for k in range(size - 1)))
