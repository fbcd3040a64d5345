from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leviext.linalg import Matrix, Subspace, kernel, rank, rref, solve

small = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rref_known():
    R, piv = rref(Matrix.from_dense([[2, 4, 6], [1, 2, 4]]))
    assert R.to_lists() == [[1, 2, 0], [0, 0, 1]]
    assert list(piv) == [0, 2]


def test_floats_rejected():
    with pytest.raises((TypeError, ValueError)):
        Matrix.from_dense([[0.5]])


def test_solve_free_variables_zero():
    M = Matrix.from_dense([[1, 1, 0], [0, 0, 1]])
    assert solve(M, [3, 5]) == [3, 0, 5]
    assert solve(Matrix.from_dense([[1], [1]]), [1, 2]) is None


def test_kernel_dimension():
    M = Matrix.from_dense([[1, 2, 3], [2, 4, 6]])
    K = kernel(M)
    assert K.dim == 2
    for v in K.vectors():
        assert not M.apply(v)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_canonical_under_row_operations(rows):
    A = Matrix.from_dense(rows)
    # premultiply by an invertible lower-unitriangular matrix
    n = A.nrows
    P = Matrix.from_entries(n, n, {**{(i, i): 1 for i in range(n)}, **{(i, j): (i + 2 * j) % 3 - 1 for i in range(n) for j in range(i)}})
    assert rref(P @ A) == rref(A)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    A = Matrix.from_dense(rows)
    assert rank(A) + kernel(A).dim == A.ncols


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(small, min_size=n, max_size=n), max_size=4),
    st.lists(st.lists(small, min_size=n, max_size=n), max_size=4),
)))
def test_grassmann_identity(data):
    n, us, ws = data
    U, W = Subspace(n, us), Subspace(n, ws)
    assert (U + W).dim + (U & W).dim == U.dim + W.dim
    assert (U & W) <= U and (U & W) <= W


def test_subspace_coordinates_roundtrip():
    S = Subspace(4, [[1, 0, 1, 0], [0, 1, 1, 1]])
    v = [2, 3, 5, 3]
    c = S.coordinates(v)
    assert c is not None
    rebuilt = [sum(Fraction(ci) * b[j] for ci, b in zip(c, S.dense_vectors())) for j in range(4)]
    assert rebuilt == v
    assert not S.contains([1, 0, 0, 0])
