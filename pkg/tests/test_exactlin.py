from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tautilt.exactlin import (Mat, as_scalar, block_diag, column_space, complement_basis, hstack, in_span, kernel_basis,
                              kron, rref, solve, vstack)

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return Mat.from_rows([[draw(small) for _ in range(c)] for _ in range(r)])


def to_sympy(m: Mat) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert m.rank() == to_sympy(m).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(m):
    K = kernel_basis(m)
    assert m.rank() + len(K) == m.cols
    for v in K:
        assert not any(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4))
def test_det_matches_sympy(m):
    if m.rows != m.cols:
        return
    assert m.det() == Fraction(str(to_sympy(m).det()))


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_inverse(m):
    if m.rows != m.cols or m.det() == 0:
        return
    assert m @ m.inverse() == Mat.identity(m.rows)


@settings(max_examples=40, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_systems(a, data):
    x = Mat.from_rows([[data.draw(small)] for _ in range(a.cols)])
    b = a @ x
    y = solve(a, b)
    assert y is not None and a @ y == b


def test_solve_inconsistent():
    a = Mat.from_rows([[1, 0], [0, 0]])
    assert solve(a, Mat.from_rows([[0], [1]])) is None


def test_rref_pivots():
    r, piv = rref(Mat.from_rows([[0, 2, 4], [0, 1, 2], [1, 0, 1]]))
    assert piv == [0, 1]
    assert r[0, 0] == 1 and r[1, 1] == 1


def test_complement_and_span():
    sub = column_space(Mat.from_rows([[1], [1], [0]]))
    comp = complement_basis(sub, 3)
    assert len(comp) == 2
    assert in_span(sub, [2, 2, 0]) and not in_span(sub, [1, 0, 0])


def test_stacking_and_kron():
    a = Mat.from_rows([[1, 2]])
    b = Mat.from_rows([[3, 4]])
    assert vstack([a, b]).shape == (2, 2)
    assert hstack([a, b]).shape == (1, 4)
    assert block_diag([a, b]).shape == (2, 4)
    k = kron(Mat.identity(2), Mat.from_rows([[5]]))
    assert k == Mat.identity(2).scale(5)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_scalar(0.5)
