from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckemod import Cyc, DimensionMismatch, Mat, block_diag, cyc_make, nullspace_dim, root_of_unity


def test_constructors_and_indexing():
    m = Mat.zero(3, 2, 2)
    assert m.is_zero()
    m[0, 1] = 5
    assert m[0, 1] == 5
    assert m[1, 0].is_zero()
    m[0, 1] = 0
    assert m.is_zero()
    eye = Mat.identity(3, 4)
    assert eye.diagonal_entries() == [Cyc.from_rational(3, 1)] * 4
    d = Mat.diagonal(2, [1, Fraction(1, 2), -1])
    assert d[1, 1] == Fraction(1, 2)
    assert d.nrows == d.ncols == 3


def test_arithmetic():
    z = root_of_unity(3, 1)
    a = Mat.zero(3, 2, 2)
    a[0, 0] = 1
    a[0, 1] = z
    a[1, 1] = 2
    b = Mat.zero(3, 2, 2)
    b[0, 0] = z
    b[1, 0] = 1
    c = a * b
    # [[1, z], [0, 2]] * [[z, 0], [1, 0]] = [[z + z, 0], [2, 0]]
    assert c[0, 0] == z + z
    assert c[1, 0] == 2
    assert c[0, 1].is_zero() and c[1, 1].is_zero()
    assert (a - a).is_zero()
    assert a + (-a) == Mat.zero(3, 2, 2)
    assert a.scale(z)[0, 1] == z * z
    eye = Mat.identity(3, 2)
    assert a * eye == a and eye * a == a


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        Mat.zero(2, 2, 2) + Mat.zero(2, 3, 3)
    with pytest.raises(DimensionMismatch):
        Mat.zero(2, 2, 3) * Mat.zero(2, 2, 3)


def test_dense_and_column():
    m = Mat.zero(1, 2, 3)
    m[1, 2] = Fraction(7, 2)
    rows = m.dense()
    assert len(rows) == 2 and len(rows[0]) == 3
    assert rows[1][2] == Fraction(7, 2)
    assert rows[0][0].is_zero()
    col = m.column(2)
    assert set(col) == {1} and col[1] == Fraction(7, 2)


def test_block_diag():
    a = Mat.identity(2, 2)
    b = Mat.zero(2, 1, 1)
    b[0, 0] = -1
    m = block_diag(2, [a, b])
    assert m.nrows == m.ncols == 3
    assert m[0, 0] == 1 and m[1, 1] == 1 and m[2, 2] == -1
    assert m[0, 2].is_zero() and m[2, 0].is_zero()


def test_nullspace_dim():
    one = Cyc.from_rational(3, 1)
    z = root_of_unity(3, 1)
    # no equations: everything is free
    assert nullspace_dim([], 4, 3) == 4
    # independent unit rows
    rows = [{0: one}, {1: one}]
    assert nullspace_dim(rows, 3, 3) == 1
    # second row is z^2 * first: (1, z) and (z^2, z^3=1)
    rows = [{0: one, 1: z}, {0: z * z, 1: one}]
    assert nullspace_dim(rows, 2, 3) == 1
    # genuinely independent pair
    rows = [{0: one, 1: z}, {0: one, 1: -z}]
    assert nullspace_dim(rows, 2, 3) == 0
    # zero rows contribute nothing
    assert nullspace_dim([{}, {0: Cyc.zero(3)}], 2, 3) == 2


@st.composite
def small_matrices(draw):
    z = root_of_unity(3, 1)
    basis = [Cyc.from_rational(3, 1), z, z * z, Cyc.from_rational(3, -2)]
    mats = []
    for _ in range(3):
        m = Mat.zero(3, 2, 2)
        for i in range(2):
            for j in range(2):
                pick = draw(st.integers(min_value=-1, max_value=3))
                if pick >= 0:
                    m[i, j] = basis[pick]
        mats.append(m)
    return mats


@given(small_matrices())
def test_matrix_ring_axioms(mats):
    a, b, c = mats
    assert (a + b) * c == a * c + b * c
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
