from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from crossmod import vec
from crossmod.linalg import SparseMatrix, in_image, kernel_basis, nullity, rank

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4) | st.just(Q(0))


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = [[draw(entries) for _ in range(c)] for _ in range(r)]
    return SparseMatrix.from_dense(rows)


def to_sympy(m):
    return sympy.Matrix(m.nrows, m.ncols, lambda i, j: sympy.Rational(m.to_dense()[i][j]))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_agrees_with_sympy(m):
    assert rank(m) == to_sympy(m).rank()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_basis_is_a_basis_of_the_nullspace(m):
    ker = kernel_basis(m)
    assert len(ker) == nullity(m) == len(to_sympy(m).nullspace())
    for v in ker:
        assert not any(m.apply(v))
    if ker:
        assert sympy.Matrix([[sympy.Rational(x) for x in v] for v in ker]).rank() == len(ker)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_in_image_round_trip(m, data):
    x = [data.draw(entries) for _ in range(m.ncols)]
    dense = m.to_dense()
    b = [sum(dense[i][j] * x[j] for j in range(m.ncols)) for i in range(m.nrows)]
    y = in_image(m, b)
    assert y is not None
    assert [sum(dense[i][j] * y[j] for j in range(m.ncols)) for i in range(m.nrows)] == b


def test_in_image_rejects_vector_outside_column_space():
    m = SparseMatrix.from_dense([[1, 2], [2, 4]])
    assert in_image(m, [1, 0]) is None
    assert in_image(m, [1, 2]) is not None
    with pytest.raises(ValueError):
        in_image(m, [1, 2, 3])


def test_entries_outside_shape_raise():
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_fraction_entries_are_exact():
    m = SparseMatrix.from_dense([[Q(1, 3), Q(1, 6)], [Q(2, 3), Q(1, 3)]])
    assert rank(m) == 1
    assert kernel_basis(m) == [[Q(-1, 2), Q(1)]]


def test_matmul_and_transpose():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [1, 0]]
    assert a.transpose().to_dense() == [[1, 0], [2, 1]]


def test_polynomial_helpers():
    p = {0: Q(1), 2: Q(3)}
    assert vec.poly_deriv(p) == {1: 6}
    assert vec.poly_integrate({1: Q(6)}) == {2: 3}
    assert vec.poly_mul(p, {1: Q(1)}) == {1: 1, 3: 3}
    assert vec.poly_eval(p, 2) == 13
    assert vec.add({1: Q(1)}, {1: Q(-1)}) == {}
