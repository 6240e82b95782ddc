"""Ideals of polynomial germs at the origin, and their jets.

Membership and equality are decided only modulo ``m^{D+1}`` (``m`` the
maximal ideal at the origin), where they reduce to finite linear algebra
over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from operator import add

from ..exactlinalg import rank_rational
from ..polyring import MultiPoly, VarTable, term_key

__all__ = [
    "IdealPresentation",
    "JetSpan",
    "corank_at_origin",
    "linear_rank",
    "jet_membership",
    "ideal_equal_mod_jet",
    "monomials_up_to",
]


class IdealPresentation:
    """Generators of an ideal in the germ algebra at the origin.

    Generators are truncated to ``jet`` (when given), normalized, stripped of
    zeros and deduplicated, keeping the first occurrence.  Every generator
    must vanish at the origin.
    """

    __slots__ = ("vars", "generators", "provenance", "jet")

    def __init__(self, vars: VarTable, generators=(), provenance=None, jet: int | None = None):
        gens = list(generators)
        tags = list(provenance) if provenance is not None else [""] * len(gens)
        if len(tags) != len(gens):
            raise ValueError("one provenance tag per generator is required")
        seen = set()
        kept, kept_tags = [], []
        for g, tag in zip(gens, tags):
            if g.vars != vars:
                raise ValueError("generator over a different variable table")
            if jet is not None:
                g = g.truncate(jet)
            if not g:
                continue
            if g.eval_origin() != 0:
                raise ValueError(f"generator {g.to_text()} does not vanish at the origin")
            g = g.normalized()
            if g in seen:
                continue
            seen.add(g)
            kept.append(g)
            kept_tags.append(tag)
        self.vars = vars
        self.generators = tuple(kept)
        self.provenance = tuple(kept_tags)
        self.jet = jet

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"IdealPresentation({len(self)} generators in {len(self.vars)} variables)"

    def extended(self, polys, provenance=None) -> "IdealPresentation":
        polys = list(polys)
        tags = list(provenance) if provenance is not None else [""] * len(polys)
        return IdealPresentation(self.vars, list(self.generators) + polys,
                                 list(self.provenance) + tags, self.jet)

    def truncated(self, jet: int) -> "IdealPresentation":
        if self.jet is not None:
            jet = min(jet, self.jet)
        return IdealPresentation(self.vars, self.generators, self.provenance, jet)

    def linear_rows(self):
        width = len(self.vars)
        rows = []
        for g in self.generators:
            row = [0] * width
            for i, c in g.linear_coeffs().items():
                row[i] = c
            rows.append(row)
        return rows

    def texts(self):
        return [g.to_text() for g in self.generators]


def linear_rank(polys, width: int) -> int:
    rows = []
    for g in polys:
        row = [0] * width
        for i, c in g.linear_coeffs().items():
            row[i] = c
        if any(row):
            rows.append(row)
    return rank_rational(rows) if rows else 0


def corank_at_origin(ideal: IdealPresentation) -> int:
    """Number of variables minus the rank of the generators' linear parts.

    The gradient at the origin of ``u*g`` is ``u(0)`` times that of ``g``
    when ``g(0) = 0``, so generator gradients span those of the whole ideal.
    """
    return len(ideal.vars) - linear_rank(ideal.generators, len(ideal.vars))


def monomials_up_to(width: int, degree: int):
    """Exponent tuples of total degree ``0..degree``, in ascending canonical order."""
    out = []
    for d in range(degree + 1):
        block = []
        for combo in combinations_with_replacement(range(width), d):
            m = [0] * width
            for i in combo:
                m[i] += 1
            block.append(tuple(m))
        block.sort(key=term_key)
        out.extend(block)
    return out


class JetSpan:
    """Rational span of truncated polynomials, kept in semi-echelon form.

    Each stored row is keyed by its leading monomial (lowest in canonical
    order) with leading coefficient 1.
    """

    def __init__(self, vars: VarTable, degree: int):
        if degree < 1:
            raise ValueError("jet degree must be at least 1")
        self.vars = vars
        self.degree = degree
        self.rows = {}
        self._monos = {}

    def __len__(self):
        return len(self.rows)

    def _insert(self, vec: dict) -> bool:
        vec = {m: Fraction(c) for m, c in vec.items() if c}
        while vec:
            lead = min(vec, key=term_key)
            row = self.rows.get(lead)
            if row is None:
                c = vec[lead]
                self.rows[lead] = {m: v / c for m, v in vec.items()}
                return True
            c = vec[lead]
            for m, v in row.items():
                nv = vec.get(m, 0) - c * v
                if nv:
                    vec[m] = nv
                else:
                    vec.pop(m, None)
        return False

    def add(self, p: MultiPoly) -> bool:
        """Add one truncated vector; return whether the span grew."""
        return self._insert({m: c for m, c in p.terms.items() if sum(m) <= self.degree})

    def add_generator(self, g: MultiPoly) -> None:
        """Add every truncated multiple ``x^k * g`` of the generator."""
        D = self.degree
        order = g.order()
        if order < 0 or order > D:
            return
        room = D - order
        monos = self._monos.get(room)
        if monos is None:
            monos = self._monos[room] = monomials_up_to(len(self.vars), room)
        terms = [(m, c, sum(m)) for m, c in g.terms.items() if sum(m) <= D]
        for k in monos:
            dk = sum(k)
            vec = {}
            for m, c, dm in terms:
                if dm + dk <= D:
                    vec[tuple(map(add, m, k))] = c
            if vec:
                self._insert(vec)

    def contains(self, p: MultiPoly) -> bool:
        vec = {m: c for m, c in p.terms.items() if sum(m) <= self.degree}
        while vec:
            lead = min(vec, key=term_key)
            row = self.rows.get(lead)
            if row is None:
                return False
            c = vec[lead]
            for m, v in row.items():
                nv = vec.get(m, 0) - c * v
                if nv:
                    vec[m] = nv
                else:
                    vec.pop(m, None)
        return True

    @classmethod
    def of_ideal(cls, ideal: IdealPresentation, degree: int) -> "JetSpan":
        span = cls(ideal.vars, degree)
        for g in ideal.generators:
            span.add_generator(g)
        return span


def jet_membership(p: MultiPoly, ideal: IdealPresentation, D: int) -> bool:
    """Whether ``p`` lies in ``ideal + m^{D+1}``."""
    if p.vars != ideal.vars:
        raise ValueError("polynomial and ideal use different variable tables")
    return JetSpan.of_ideal(ideal, D).contains(p)


def ideal_equal_mod_jet(lhs: IdealPresentation, rhs: IdealPresentation, D: int) -> bool:
    if lhs.vars != rhs.vars:
        raise ValueError("ideals use different variable tables")
    left = JetSpan.of_ideal(lhs, D)
    if not all(left.contains(g) for g in rhs.generators):
        return False
    right = JetSpan.of_ideal(rhs, D)
    return all(right.contains(g) for g in lhs.generators)
