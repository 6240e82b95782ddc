"""Exact sparse multivariate polynomials over the rationals.

Polynomials live over a :class:`VarTable`, an ordered, immutable list of
variable names.  A monomial is a tuple of exponents aligned with the table,
and a :class:`MultiPoly` maps monomials to nonzero rational coefficients.
Integral coefficients are stored as plain ``int`` and everything else as
``fractions.Fraction``.

Canonical term order (used for printing and for picking the leading term):
ascending total degree, ties broken lexicographically with variable 0 the
most significant.  This puts the lowest-order part of a germ first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from operator import add

__all__ = ["VarTable", "MultiPoly", "ContextError", "term_key", "normalize_coeff"]


class ContextError(ValueError):
    """Operands live over incompatible variable tables."""


def normalize_coeff(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return normalize_coeff(Fraction(c))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def term_key(mono):
    return (sum(mono), tuple(-e for e in mono))


class VarTable:
    """Ordered variable names with stable integer indices."""

    __slots__ = ("names", "_index", "_hash")

    def __init__(self, names):
        names = tuple(str(n) for n in names)
        index = {}
        for i, name in enumerate(names):
            if name in index:
                raise ValueError(f"duplicate variable name {name!r}")
            index[name] = i
        self.names = names
        self._index = index
        self._hash = hash(names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return self is other or (isinstance(other, VarTable) and self.names == other.names)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"VarTable({list(self.names)!r})"

    def index(self, v) -> int:
        """Resolve a name, index, or single-variable polynomial to an index."""
        if isinstance(v, int):
            if not 0 <= v < len(self.names):
                raise ContextError(f"variable index {v} out of range")
            return v
        if isinstance(v, MultiPoly):
            return self.index(v.as_variable())
        try:
            return self._index[v]
        except KeyError:
            raise ContextError(f"unknown variable {v!r}") from None

    def extend(self, names) -> "VarTable":
        return VarTable(self.names + tuple(names))

    def var(self, v) -> "MultiPoly":
        i = self.index(v)
        mono = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return MultiPoly(self, {mono: 1}, _trusted=True)

    def gens(self):
        return [self.var(i) for i in range(len(self.names))]

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {}, _trusted=True)

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c) -> "MultiPoly":
        c = normalize_coeff(c)
        if c == 0:
            return self.zero()
        return MultiPoly(self, {(0,) * len(self.names): c}, _trusted=True)


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: VarTable, terms=None, *, _trusted=False):
        self.vars = vars
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean = {}
        width = len(vars)
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != width or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for {width} variables")
            c = normalize_coeff(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}

    # -- basic protocol --------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, Rational):
            return self.terms == ({(0,) * len(self.vars): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars is not self.vars and other.vars != self.vars:
                raise ContextError("polynomials live over different variable tables")
            return other
        if isinstance(other, Rational):
            return self.vars.const(other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = normalize_coeff(s) if type(s) is not int else s
            else:
                del out[m]
        return MultiPoly(self.vars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.vars.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        c = normalize_coeff(c)
        if c == 0:
            return self.vars.zero()
        if c == 1:
            return self
        out = {}
        for m, v in self.terms.items():
            out[m] = normalize_coeff(v * c)
        return MultiPoly(self.vars, out, _trusted=True)

    def mul(self, other: "MultiPoly", jet: int | None = None) -> "MultiPoly":
        """Product, optionally dropping every term of total degree above ``jet``."""
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.vars.zero()
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        if jet is None:
            for m1, c1 in b.items():
                for m2, c2 in a.items():
                    m = tuple(map(add, m1, m2))
                    out[m] = get(m, 0) + c1 * c2
        else:
            bd = [(m, c, sum(m)) for m, c in b.items()]
            ad = [(m, c, sum(m)) for m, c in a.items()]
            for m1, c1, d1 in bd:
                room = jet - d1
                if room < 0:
                    continue
                for m2, c2, d2 in ad:
                    if d2 <= room:
                        m = tuple(map(add, m1, m2))
                        out[m] = get(m, 0) + c1 * c2
        return MultiPoly(self.vars, {m: normalize_coeff(c) for m, c in out.items() if c},
                         _trusted=True)

    # -- calculus and evaluation -----------------------------------------

    def derive(self, v) -> "MultiPoly":
        i = self.vars.index(v)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                nm = m[:i] + (e - 1,) + m[i + 1:]
                out[nm] = c * e
        return MultiPoly(self.vars, out, _trusted=True)

    def eval_origin(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def evaluate(self, point):
        """Numeric value at ``point`` (a sequence aligned with the table, or a name map)."""
        if isinstance(point, dict):
            vals = [point[name] for name in self.vars.names]
        else:
            vals = list(point)
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(vals, m):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    def truncate(self, degree: int) -> "MultiPoly":
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        return MultiPoly(self.vars, {m: c for m, c in self.terms.items() if sum(m) <= degree},
                         _trusted=True)

    def substitute(self, mapping, target: VarTable | None = None, jet: int | None = None):
        """Compose with ``mapping``: variable -> polynomial over ``target``.

        Variables absent from ``mapping`` are sent to the variable of the same
        name in ``target``.  With ``jet`` set, all intermediate products are
        truncated at that degree; this is exact modulo terms of higher degree
        when every image vanishes at the origin.
        """
        images = {}
        for k, img in mapping.items():
            images[self.vars.index(k)] = img
        if target is None:
            tables = {img.vars for img in images.values()}
            if len(tables) > 1:
                raise ContextError("substitution images use different variable tables")
            target = tables.pop() if tables else self.vars
        for i, img in list(images.items()):
            if isinstance(img, Rational):
                images[i] = target.const(img)
            elif img.vars != target:
                raise ContextError("substitution images use different variable tables")
        for i, name in enumerate(self.vars.names):
            if i not in images:
                used = any(m[i] for m in self.terms)
                if used:
                    if name not in target:
                        raise ContextError(f"variable {name!r} is neither mapped nor in target")
                    images[i] = target.var(name)
        powers = {}

        def power(i, e):
            key = (i, e)
            p = powers.get(key)
            if p is None:
                if e == 1:
                    p = images[i]
                else:
                    p = power(i, e - 1).mul(images[i], jet)
                powers[key] = p
            return p

        out = {}
        get = out.get
        for m, c in self.terms.items():
            t = None
            for i, e in enumerate(m):
                if e:
                    f = power(i, e)
                    t = f if t is None else t.mul(f, jet)
            if t is None:
                t = target.one()
            for tm, tc in t.terms.items():
                if jet is None or sum(tm) <= jet:
                    out[tm] = get(tm, 0) + c * tc
        return MultiPoly(target, {m: normalize_coeff(c) for m, c in out.items() if c},
                         _trusted=True)

    def lift(self, target: VarTable) -> "MultiPoly":
        """Re-express over ``target``, which must contain every used variable name."""
        if target == self.vars:
            return self
        pos = []
        for i, name in enumerate(self.vars.names):
            if any(m[i] for m in self.terms):
                if name not in target:
                    raise ContextError(f"variable {name!r} missing from target table")
                pos.append((i, target.index(name)))
        width = len(target)
        out = {}
        for m, c in self.terms.items():
            nm = [0] * width
            for i, j in pos:
                nm[j] = m[i]
            out[tuple(nm)] = c
        return MultiPoly(target, out, _trusted=True)

    # -- structure -------------------------------------------------------

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree present (-1 for the zero polynomial)."""
        return min((sum(m) for m in self.terms), default=-1)

    def used_indices(self):
        width = len(self.vars)
        return [i for i in range(width) if any(m[i] for m in self.terms)]

    def linear_coeffs(self):
        """Map variable index -> coefficient of the degree-one part."""
        out = {}
        for m, c in self.terms.items():
            if sum(m) == 1:
                out[m.index(1)] = c
        return out

    def as_variable(self):
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if c == 1 and sum(m) == 1:
                return m.index(1)
        raise ValueError(f"{self} is not a single variable")

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: term_key(mc[0]))

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return min(self.terms.items(), key=lambda mc: term_key(mc[0]))

    def normalized(self) -> "MultiPoly":
        """Primitive integer multiple with positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            if type(c) is not int:
                den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for x in nums:
            g = gcd(g, x)
        if self.leading_term()[1] < 0:
            g = -g
        return MultiPoly(self.vars, {m: x // g for m, x in zip(self.terms, nums)}, _trusted=True)

    def exact_div(self, q: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        q = self._coerce(q)
        if not q.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        key = lambda m: (sum(m), m)  # noqa: E731 - graded lex, a term order
        qm = max(q.terms, key=key)
        qc = q.terms[qm]
        rest = dict(self.terms)
        quot = {}
        while rest:
            m = max(rest, key=key)
            c = rest[m]
            e = tuple(x - y for x, y in zip(m, qm))
            if any(x < 0 for x in e):
                raise ArithmeticError("polynomial division is not exact")
            f = normalize_coeff(Fraction(c) / qc)
            quot[e] = f
            for mm, cc in q.terms.items():
                t = tuple(map(add, e, mm))
                v = rest.get(t, 0) - f * cc
                if v:
                    rest[t] = v
                else:
                    rest.pop(t, None)
        return MultiPoly(self.vars, {m: normalize_coeff(c) for m, c in quot.items()},
                         _trusted=True)

    # -- rendering -------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        names = self.vars.names
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e:
                    factors.append(f"{names[i]}^{e}")
            body = "*".join(factors)
            if not body:
                body = str(a)
            elif a != 1:
                body = f"{a}*{body}"
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)
