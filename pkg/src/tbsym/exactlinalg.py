"""Dense exact matrices: rational rank, polynomial determinants, minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .polyring import MultiPoly, VarTable, normalize_coeff

__all__ = [
    "ShapeError",
    "RatMatrix",
    "PolyMatrix",
    "Minor",
    "eval_matrix_origin",
    "rank_rational",
    "det_poly",
    "det_cofactor",
    "minors",
    "count_minors",
]

COFACTOR_BELOW = 4


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class RatMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = [[normalize_coeff(x) for x in row] for row in rows]
        if not rows or not rows[0]:
            raise ShapeError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ShapeError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RatMatrix({self.rows!r})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([list(col) for col in zip(*self.rows)])

    def rank(self) -> int:
        return rank_rational(self)


class PolyMatrix:
    """Dense matrix of polynomials over one variable table."""

    __slots__ = ("vars", "rows", "nrows", "ncols")

    def __init__(self, vars: VarTable, rows):
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise ShapeError("matrix dimensions must be positive")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ShapeError("ragged rows")
            for k, x in enumerate(row):
                if isinstance(x, MultiPoly):
                    if x.vars != vars:
                        raise ShapeError("entry over a different variable table")
                else:
                    row[k] = vars.const(x)
        self.vars = vars
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def identity(cls, vars: VarTable, size: int) -> "PolyMatrix":
        return cls(vars, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def jacobian(cls, polys, vars: VarTable, columns=None) -> "PolyMatrix":
        """Rows are gradients of ``polys``; ``columns`` picks and orders the variables."""
        cols = range(len(vars)) if columns is None else [vars.index(c) for c in columns]
        return cls(vars, [[p.derive(j) for j in cols] for p in polys])

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.vars == other.vars
                and self.rows == other.rows)

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.vars, [list(col) for col in zip(*self.rows)])

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix(self.vars, [[self.rows[i][j] for j in cols] for i in rows])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.vars, [[fn(x) for x in row] for row in self.rows])

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(self.vars, [[x + y for x, y in zip(r, s)]
                                      for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyMatrix":
        return self.map(lambda x: x.scale(c) if not isinstance(c, MultiPoly) else x * c)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.vars.zero()
        out = []
        for row in self.rows:
            new = []
            for j in range(other.ncols):
                acc = zero
                for k, x in enumerate(row):
                    y = other.rows[k][j]
                    if x and y:
                        acc = acc + x * y
                new.append(acc)
            out.append(new)
        return PolyMatrix(self.vars, out)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)


def eval_matrix_origin(M: PolyMatrix) -> RatMatrix:
    return RatMatrix([[x.eval_origin() for x in row] for row in M.rows])


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            if type(x) is not int:
                den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank_rational(M) -> int:
    """Exact rank by fraction-free (Bareiss) elimination over the integers."""
    rows = M.rows if isinstance(M, RatMatrix) else [list(r) for r in M]
    a = _integer_rows(rows)
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, nr):
            f = a[i][col]
            row_i, row_p = a[i], a[rank]
            for j in range(col, nc):
                row_i[j] = (p * row_i[j] - f * row_p[j]) // prev
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def det_cofactor(M: PolyMatrix, jet: int | None = None) -> MultiPoly:
    """Laplace expansion along rows, memoized over column subsets."""
    if M.nrows != M.ncols:
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    n = M.nrows
    zero = M.vars.zero()
    # memo[cols] = det of the bottom len(cols) rows restricted to cols
    memo = {(): M.vars.one()}
    for size in range(1, n + 1):
        row = M.rows[n - size]
        new = {}
        for cols in combinations(range(n), size):
            acc = zero
            for k, c in enumerate(cols):
                x = row[c]
                if not x:
                    continue
                sub = memo[cols[:k] + cols[k + 1:]]
                if not sub:
                    continue
                t = x.mul(sub, jet)
                acc = acc - t if k & 1 else acc + t
            new[cols] = acc
        memo = new
    return memo[tuple(range(n))]


def det_poly(M: PolyMatrix, jet: int | None = None) -> MultiPoly:
    """Exact symbolic determinant.

    Small matrices, and every truncated (``jet``) request, use cofactor
    expansion; larger exact ones use Bareiss elimination with exact division.
    """
    if M.nrows != M.ncols:
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    n = M.nrows
    if n < COFACTOR_BELOW or jet is not None:
        return det_cofactor(M, jet)
    a = [list(row) for row in M.rows]
    sign = 1
    prev = M.vars.one()
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return M.vars.zero()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k]
            for j in range(k + 1, n):
                num = p * a[i][j] - f * a[k][j]
                a[i][j] = num.exact_div(prev) if num else num
            a[i][k] = M.vars.zero()
        prev = p
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


@dataclass(frozen=True)
class Minor:
    rows: tuple
    cols: tuple
    value: MultiPoly

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero()


def count_minors(nrows: int, ncols: int, s: int) -> int:
    return comb(nrows, s) * comb(ncols, s)


def minors(M: PolyMatrix, s: int, jet: int | None = None):
    """Yield every s x s minor in lexicographic (row-set, col-set) order.

    Zero minors are yielded too; check ``Minor.is_zero``.  This is a
    generator, so callers can stop early.
    """
    if not 1 <= s <= min(M.nrows, M.ncols):
        raise ShapeError(f"minor order {s} out of range for {M.shape} matrix")
    for rows in combinations(range(M.nrows), s):
        for cols in combinations(range(M.ncols), s):
            yield Minor(rows, cols, det_poly(M.submatrix(rows, cols), jet))
