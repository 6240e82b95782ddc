import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import TABLE, polys
from tbsym.exactlinalg import PolyMatrix
from tbsym.polyring import VarTable
from tbsym.toeplitz import LowerToeplitzSeries, NotInvertibleError

x, y, z = TABLE.gens()


def unitriangular(size, tail):
    return LowerToeplitzSeries.monic(TABLE, size, tail)


def test_inverse_of_one_plus_shift():
    V = unitriangular(5, [x])
    W = V.inverse()
    assert [c.to_text() for c in W.coeffs] == ["1", "-x", "x^2", "-x^3", "x^4"]
    assert V * W == LowerToeplitzSeries.identity(TABLE, 5)


def test_not_invertible():
    with pytest.raises(NotInvertibleError):
        LowerToeplitzSeries(TABLE, 3, [2, x]).inverse()


def test_matrix_picture_matches_series_product():
    V, W = unitriangular(4, [x, y]), unitriangular(4, [z, 0, x])
    assert V.to_poly_matrix() @ W.to_poly_matrix() == (V * W).to_poly_matrix()
    block = V.to_poly_matrix(range(1, 3), range(2))
    assert block == PolyMatrix(TABLE, [[x, 1], [y, x]])


def test_powers():
    V = unitriangular(6, [x, y])
    assert V.power(3) == V * V * V
    assert V.power(-2) * V.power(2) == LowerToeplitzSeries.identity(TABLE, 6)
    assert V.power(0) == LowerToeplitzSeries.identity(TABLE, 6)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.lists(polys(max_terms=2, max_exp=1), min_size=5, max_size=5),
       st.lists(polys(max_terms=2, max_exp=1), min_size=5, max_size=5))
def test_commutation_and_inverse(size, a, b):
    V, W = unitriangular(size, a), unitriangular(size, b)
    assert V * W == W * V
    assert V * V.inverse() == LowerToeplitzSeries.identity(TABLE, size)


def random_series(rng, table, size):
    tail = []
    for _ in range(rng.randint(1, size - 1)):
        coeff = table.zero()
        for v in table.gens():
            coeff = coeff + v.scale(rng.randint(-3, 3))
        tail.append(coeff + rng.randint(-2, 2))
    return LowerToeplitzSeries.monic(table, size, tail)


def test_seeded_unitriangular_pairs():
    rng = random.Random(20240611)
    table = VarTable(["v0", "v1", "v2"])
    for _ in range(40):
        size = rng.randint(2, 7)
        V, W = random_series(rng, table, size), random_series(rng, table, size)
        assert V * W == W * V
        assert (V.to_poly_matrix() @ V.inverse().to_poly_matrix()
                == PolyMatrix.identity(table, size))
