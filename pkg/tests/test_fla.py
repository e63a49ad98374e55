import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tgrs.errors import DimensionMismatch
from tgrs.fla import MatrixGF, det, kernel, rank, rref
from tgrs.gf import GF

from conftest import elements, fields

FIELDS = [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4)]


@st.composite
def matrices(draw, r=None, c=None, field=None):
    F = field or draw(fields(FIELDS))
    r = r if r is not None else draw(st.integers(1, 5))
    c = c if c is not None else draw(st.integers(1, 6))
    rows = [[draw(elements(F)) for _ in range(c)] for _ in range(r)]
    return MatrixGF(F, rows)


def leibniz(M: MatrixGF):
    """Determinant by the permutation expansion."""
    F, n = M.field, M.nrows
    total = F.zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = F.one if inversions % 2 == 0 else -F.one
        for i, j in enumerate(perm):
            term = term * M[i, j]
        total = total + term
    return total


@given(matrices())
def test_rank_nullity(M):
    K = kernel(M)
    assert rank(M) + K.nrows == M.ncols
    if K.nrows:
        assert (M @ K.T).is_zero()
        assert rank(K) == K.nrows


@given(matrices())
def test_rank_of_transpose(M):
    assert rank(M) == rank(M.T)


@given(matrices())
def test_rref_shape(M):
    R, r, piv = rref(M)
    assert r == len(piv) == rank(M)
    for i, j in enumerate(piv):
        assert R[i, j] == M.field.one
        assert all(not R[t, j] for t in range(R.nrows) if t != i)


@given(st.data())
def test_det_matches_permutation_expansion(data):
    n = data.draw(st.integers(1, 5))
    M = data.draw(matrices(n, n))
    assert det(M) == leibniz(M)
    assert bool(det(M)) == (rank(M) == n)


@given(st.data())
def test_det_multiplicative_and_inverse(data):
    F = data.draw(fields(FIELDS))
    n = data.draw(st.integers(1, 4))
    A = data.draw(matrices(n, n, F))
    B = data.draw(matrices(n, n, F))
    assert det(A @ B) == det(A) * det(B)
    if det(A):
        assert A @ A.inverse() == MatrixGF.identity(F, n)


def test_dimension_checks():
    F = GF(3)
    with pytest.raises(DimensionMismatch):
        MatrixGF(F, [[1, 2], [1]])
    with pytest.raises(DimensionMismatch):
        MatrixGF.identity(F, 2) @ MatrixGF.identity(F, 3)
