from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from newton_subres.algebra import (
    Matrix,
    PolyMatrix,
    det_exact,
    det_polymatrix,
    interpolation_points,
    mat_poly_eval,
)
from newton_subres.errors import DimensionError
from newton_subres.poly import PowerPoly

from .conftest import cofactor_det, power_polys, rationals, square_matrices

X = PowerPoly.x()


def test_det_identity():
    assert det_exact(Matrix.identity(3)) == 1


def test_det_small_examples():
    m = [[1, 1], [1, 2]]
    assert cofactor_det([[Fraction(v) for v in r] for r in m]) == 1
    assert det_exact(Matrix.from_rows(m)) == 1
    assert det_exact(Matrix.from_rows([[1, 2], [2, 4]])) == 0


def test_det_empty_is_one():
    assert det_exact(Matrix(0, 0, [])) == 1


def test_det_rational_entries():
    m = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]])
    assert det_exact(m) == Fraction(1, 10) - Fraction(1, 12)


def test_det_non_square():
    with pytest.raises(DimensionError):
        det_exact(Matrix.from_rows([[1, 2, 3]]))


@given(square_matrices(max_order=5))
def test_det_matches_cofactor_expansion(m):
    assert det_exact(m) == cofactor_det(m.tolist())


def test_interpolation_points_order():
    assert interpolation_points(5) == [0, 1, -1, 2, -2]


def test_det_polymatrix_examples():
    m = PolyMatrix.from_rows([[0, 1], [X - 1, -1]])
    assert det_polymatrix(m, 1) == -(X - 1)
    assert det_polymatrix(PolyMatrix.from_rows([[1, 0], [0, 1]]), 0) == 1
    assert det_polymatrix(PolyMatrix.from_rows([[X, 0], [0, X]]), 2) == X * X


def test_det_polymatrix_empty():
    assert det_polymatrix(PolyMatrix(0, 0, []), 3) == 1


def test_det_polymatrix_non_square():
    with pytest.raises(DimensionError):
        det_polymatrix(PolyMatrix.from_rows([[X, 1]]), 1)


@st.composite
def linear_polymatrices(draw):
    n = draw(st.integers(1, 4))
    entries = [PowerPoly(draw(st.lists(rationals, min_size=2, max_size=2))) for _ in range(n * n)]
    return PolyMatrix(n, n, entries)


@given(linear_polymatrices(), rationals)
def test_det_polymatrix_commutes_with_evaluation(m, r):
    assert det_polymatrix(m, m.rows)(r) == det_exact(m.evaluate(r))


def test_mat_poly_eval_examples():
    m = Matrix.from_rows([[1, 0], [1, 2]])
    assert mat_poly_eval(PowerPoly.constant(1), m) == Matrix.identity(2)
    assert mat_poly_eval(X, m) == m
    assert mat_poly_eval(X - 1, m) == Matrix.from_rows([[0, 0], [1, 1]])


def test_mat_poly_eval_zero_poly():
    assert mat_poly_eval(PowerPoly(), Matrix.identity(2)) == Matrix.zeros(2, 2)


def test_mat_poly_eval_non_square():
    with pytest.raises(DimensionError):
        mat_poly_eval(X, Matrix.from_rows([[1, 2]]))


@given(power_polys(max_degree=3), power_polys(max_degree=3), square_matrices(max_order=3, min_order=1))
def test_mat_poly_eval_is_multiplicative(q1, q2, m):
    assert mat_poly_eval(q1 * q2, m) == mat_poly_eval(q1, m) @ mat_poly_eval(q2, m)


def test_matrix_shape_checks():
    with pytest.raises(DimensionError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionError):
        Matrix.identity(2).vstack(Matrix.identity(3))


def test_matrix_accessors():
    m = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.column(1) == (2, 5)
    assert m.row(1) == (4, 5, 6)
    assert m.transpose().shape == (3, 2)
    assert m.select_columns([2, 0]) == Matrix.from_rows([[3, 1], [6, 4]])
