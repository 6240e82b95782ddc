from fractions import Fraction

from hypothesis import strategies as st

from tbsym.polyring import MultiPoly, VarTable

TABLE = VarTable(["x", "y", "z"])

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polys(draw, table=TABLE, max_terms=5, max_exp=3):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_exp)] * len(table)),
        small_rationals, max_size=max_terms))
    return MultiPoly(table, terms)


@st.composite
def germs(draw, table=TABLE, max_terms=4, max_exp=3):
    """Polynomials vanishing at the origin."""
    p = draw(polys(table, max_terms, max_exp))
    return p - p.eval_origin()

