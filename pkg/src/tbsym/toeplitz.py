"""Lower Toeplitz matrices as truncated series in the lower shift matrix.

An N x N lower Toeplitz matrix ``t0*I + t1*L + ... + t_{N-1}*L^{N-1}`` is
stored as its coefficient list.  Since ``L^N = 0`` these matrices form a
commutative ring isomorphic to ``R[x]/(x^N)``, so products are truncated
Cauchy products and inverses come from long division.
"""

from __future__ import annotations

from .exactlinalg import PolyMatrix, ShapeError
from .polyring import MultiPoly, VarTable

__all__ = ["LowerToeplitzSeries", "NotInvertibleError"]


class NotInvertibleError(ArithmeticError):
    """Series inversion needs a unit constant term equal to 1."""


class LowerToeplitzSeries:
    __slots__ = ("vars", "coeffs")

    def __init__(self, vars: VarTable, size: int, coeffs=()):
        if size < 1:
            raise ShapeError("series size must be positive")
        coeffs = list(coeffs)
        if len(coeffs) > size:
            extra = coeffs[size:]
            if any(c for c in extra):
                raise ShapeError(f"{len(coeffs)} coefficients do not fit size {size}")
            coeffs = coeffs[:size]
        zero = vars.zero()
        out = []
        for c in coeffs:
            if not isinstance(c, MultiPoly):
                c = vars.const(c)
            elif c.vars != vars:
                raise ShapeError("coefficient over a different variable table")
            out.append(c)
        out.extend([zero] * (size - len(out)))
        self.vars = vars
        self.coeffs = tuple(out)

    @classmethod
    def identity(cls, vars: VarTable, size: int) -> "LowerToeplitzSeries":
        return cls(vars, size, [vars.one()])

    @classmethod
    def monic(cls, vars: VarTable, size: int, tail) -> "LowerToeplitzSeries":
        """``I + tail[0]*L + tail[1]*L^2 + ...``, truncated to ``size``."""
        tail = list(tail)[: size - 1]
        return cls(vars, size, [vars.one()] + tail)

    @property
    def size(self) -> int:
        return len(self.coeffs)

    @property
    def unitriangular(self) -> bool:
        return self.coeffs[0] == 1

    def __eq__(self, other):
        return (isinstance(other, LowerToeplitzSeries) and self.vars == other.vars
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"LowerToeplitzSeries(size={self.size}, coeffs={[str(c) for c in self.coeffs]})"

    def coefficient(self, k: int) -> MultiPoly:
        if not 0 <= k < self.size:
            raise IndexError(f"coefficient index {k} outside 0..{self.size - 1}")
        return self.coeffs[k]

    def resized(self, size: int) -> "LowerToeplitzSeries":
        """Truncate or zero-extend to another ambient size."""
        return LowerToeplitzSeries(self.vars, size, self.coeffs[:size])

    def _check(self, other):
        if not isinstance(other, LowerToeplitzSeries):
            raise TypeError("expected a LowerToeplitzSeries")
        if self.size != other.size:
            raise ShapeError(f"size mismatch {self.size} vs {other.size}")
        if self.vars != other.vars:
            raise ShapeError("series over different variable tables")

    def __add__(self, other):
        self._check(other)
        return LowerToeplitzSeries(self.vars, self.size,
                                   [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return LowerToeplitzSeries(self.vars, self.size, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LowerToeplitzSeries":
        return LowerToeplitzSeries(self.vars, self.size, [x * c for x in self.coeffs])

    def mul(self, other: "LowerToeplitzSeries", jet: int | None = None) -> "LowerToeplitzSeries":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        zero = self.vars.zero()
        out = []
        for k in range(self.size):
            acc = zero
            for i in range(k + 1):
                x, y = a[i], b[k - i]
                if x and y:
                    acc = acc + x.mul(y, jet)
            out.append(acc)
        return LowerToeplitzSeries(self.vars, self.size, out)

    __mul__ = mul

    def inverse(self, jet: int | None = None) -> "LowerToeplitzSeries":
        if not self.unitriangular:
            raise NotInvertibleError("constant term must be exactly 1")
        t = self.coeffs
        w = [self.vars.one()]
        for k in range(1, self.size):
            acc = self.vars.zero()
            for j in range(1, k + 1):
                if t[j] and w[k - j]:
                    acc = acc + t[j].mul(w[k - j], jet)
            w.append(-acc)
        return LowerToeplitzSeries(self.vars, self.size, w)

    def power(self, k: int, jet: int | None = None) -> "LowerToeplitzSeries":
        if k < 0:
            return self.inverse(jet).power(-k, jet)
        result = LowerToeplitzSeries.identity(self.vars, self.size)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, jet)
            k >>= 1
            if k:
                base = base.mul(base, jet)
        return result

    def derive(self, v) -> "LowerToeplitzSeries":
        return LowerToeplitzSeries(self.vars, self.size, [c.derive(v) for c in self.coeffs])

    def map(self, fn) -> "LowerToeplitzSeries":
        return LowerToeplitzSeries(self.vars, self.size, [fn(c) for c in self.coeffs])

    def to_poly_matrix(self, rows=None, cols=None) -> PolyMatrix:
        """Dense block ``rows x cols`` of the full N x N matrix (entry (i, j) = t_{i-j})."""
        n = self.size
        rows = range(n) if rows is None else rows
        cols = range(n) if cols is None else cols
        for idx in list(rows) + list(cols):
            if not 0 <= idx < n:
                raise ShapeError(f"index {idx} outside a {n} x {n} matrix")
        zero = self.vars.zero()
        return PolyMatrix(self.vars, [[self.coeffs[i - j] if i >= j else zero for j in cols]
                                      for i in rows])


def series_mul(V, W):
    return V.mul(W)


def series_inv(V):
    return V.inverse()


def series_pow(V, k):
    return V.power(k)


__all__ += ["series_mul", "series_inv", "series_pow"]
