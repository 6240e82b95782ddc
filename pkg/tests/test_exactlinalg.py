from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import TABLE, polys
from tbsym.exactlinalg import (PolyMatrix, RatMatrix, ShapeError, count_minors, det_cofactor,
                               det_poly, eval_matrix_origin, minors, rank_rational)

x, y, z = TABLE.gens()


def leibniz(M):
    n = M.nrows
    total = TABLE.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = TABLE.one()
        for i, j in enumerate(perm):
            term = term * M[i, j]
        total = total - term if inv % 2 else total + term
    return total


def test_rank_examples():
    assert rank_rational(RatMatrix([[1, 2], [2, 4]])) == 1
    assert rank_rational([[0, 0], [0, 0]]) == 0
    assert rank_rational([[Fraction(1, 2), 1, 0], [0, 0, 1], [1, 2, 1]]) == 2
    assert RatMatrix([[1, 0], [0, 1], [1, 1]]).rank() == 2


def test_two_by_two_sylvester_determinant():
    M = PolyMatrix(TABLE, [[1, 1], [y, x]])
    assert det_poly(M) == x - y


def test_bareiss_agrees_with_leibniz_on_dense_matrix():
    M = PolyMatrix(TABLE, [[x, 1, y, 0], [z, x + y, 1, 2], [1, y, x * z, z],
                           [y, 0, 1, x - 1]])
    assert det_poly(M) == leibniz(M) == det_cofactor(M)


def test_bareiss_handles_zero_pivots():
    M = PolyMatrix(TABLE, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, x, 1], [0, 0, 1, y]])
    assert det_poly(M) == -(x * y - 1)
    singular = PolyMatrix(TABLE, [[x, y, 0, 0], [2 * x, 2 * y, 0, 0], [0, 0, 1, 0],
                                  [0, 0, 0, 1]])
    assert det_poly(singular).is_zero()


@settings(max_examples=25, deadline=None)
@given(st.lists(polys(max_terms=3, max_exp=1), min_size=16, max_size=16))
def test_bareiss_equals_cofactor(entries):
    M = PolyMatrix(TABLE, [entries[i:i + 4] for i in range(0, 16, 4)])
    assert det_poly(M) == det_cofactor(M)


@settings(max_examples=25, deadline=None)
@given(st.lists(polys(max_terms=3, max_exp=2), min_size=9, max_size=9), st.integers(0, 4))
def test_jet_determinant_is_truncation(entries, d):
    M = PolyMatrix(TABLE, [entries[i:i + 3] for i in range(0, 9, 3)])
    assert det_poly(M, jet=d) == det_poly(M).truncate(d)


def test_minor_stream_order_and_count():
    M = PolyMatrix(TABLE, [[x, 1, 0], [0, y, 1], [1, 0, z]])
    got = list(minors(M, 2))
    assert len(got) == count_minors(3, 3, 2) == 9
    assert [(m.rows, m.cols) for m in got[:3]] == [((0, 1), (0, 1)), ((0, 1), (0, 2)),
                                                   ((0, 1), (1, 2))]
    assert got[0].value == x * y
    stream = minors(M, 1)
    assert next(stream).value == x
    with pytest.raises(ShapeError):
        next(minors(M, 4))


def test_matrix_product_and_origin_rank():
    J = PolyMatrix.jacobian([x + y * y, x * y, z + x * z], TABLE)
    assert J.shape == (3, 3)
    assert rank_rational(eval_matrix_origin(J)) == 2
    I3 = PolyMatrix.identity(TABLE, 3)
    assert J @ I3 == J
    with pytest.raises(ShapeError):
        J @ PolyMatrix(TABLE, [[1, 2]])
