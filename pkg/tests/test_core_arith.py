from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core_arith import (
    IntMatrix,
    determinant,
    hermite_rows,
    invariant_factors,
    kernel_basis,
    parse_weights,
    rank,
    smith_normal_form,
    to_rational,
)
from jonquieres_consts import DocumentException

small_ints = st.integers(min_value=-9, max_value=9)
matrices = st.integers(min_value=1, max_value=3).flatmap(
    lambda m: st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
)


def is_diagonal(d):
    return all(d[i, j] == 0 for i in range(d.rows) for j in range(d.cols) if i != j)


def test_to_rational():
    assert to_rational(3) == Fraction(3)
    assert to_rational("-3/4") == Fraction(-3, 4)
    assert to_rational(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(DocumentException):
        to_rational("x1")
    with pytest.raises(DocumentException):
        to_rational("1/0")


def test_int_matrix_shape():
    m = IntMatrix([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m[1, 2] == 6
    assert m.transpose().to_list() == [[1, 4], [2, 5], [3, 6]]
    assert m.apply([1, 0, -1]) == [-2, -2]
    with pytest.raises(DocumentException):
        IntMatrix([])
    with pytest.raises(DocumentException):
        IntMatrix([[1, 2], [3]])


def test_parse_weights():
    assert parse_weights("5,3;1,1") == IntMatrix([[5, 3], [1, 1]])
    assert parse_weights(" 2, -1 ") == IntMatrix([[2, -1]])
    with pytest.raises(DocumentException):
        parse_weights("5,a")


def test_rank_and_determinant():
    assert rank(IntMatrix([[1, 2], [2, 4]])) == 1
    assert rank(IntMatrix([[0, 0]])) == 0
    assert determinant(IntMatrix([[2, 1], [7, 4]])) == 1


def test_snf_identity():
    u, d, v = smith_normal_form(IntMatrix.identity(2))
    assert d == IntMatrix.identity(2)
    assert u @ IntMatrix.identity(2) @ v == d


def test_snf_row():
    _, d, _ = smith_normal_form(IntMatrix([[5, 3]]))
    assert d == IntMatrix([[1, 0]])


def test_snf_diagonal():
    _, d, _ = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    assert d == IntMatrix([[1, 0], [0, 6]])
    assert invariant_factors(IntMatrix([[2, 4]])) == [2]


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_snf_reconstruction(rows):
    m = IntMatrix(rows)
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    assert is_diagonal(d)
    diagonal = [d[k, k] for k in range(min(d.shape))]
    assert all(x >= 0 for x in diagonal)
    nonzero = [x for x in diagonal if x]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert len(nonzero) == rank(m)


def test_kernel_examples():
    assert kernel_basis(IntMatrix([[5, 3]])) == [(3, -5)]
    assert kernel_basis(IntMatrix([[0, 0]])) == [(1, 0), (0, 1)]
    assert kernel_basis(IntMatrix.identity(2)) == []


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_kernel_vectors_annihilate(rows):
    m = IntMatrix(rows)
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for vector in basis:
        assert m.apply(vector) == [0] * m.rows
        assert next(x for x in vector if x) > 0


def test_hermite_rows_reduces_above_pivots():
    rows = hermite_rows([(2, 3), (4, 7)])
    assert rows == [(2, 0), (0, 1)]
    assert hermite_rows([(0, 0)]) == []


@settings(max_examples=50, deadline=None)
@given(st.tuples(small_ints, small_ints, small_ints).map(lambda t: [Fraction(a, 7) for a in t]))
def test_rational_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
