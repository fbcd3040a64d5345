import pytest
from hypothesis import given, settings, strategies as st

from leviext.linalg import Matrix, Subspace
from leviext.sl2 import (
    Sl2Action, clebsch_gordan, decompose, direct_sum, highest_weight_vectors, irreducible, is_submodule,
    sl2_algebra, submodule_generated, tensor, wedge2, wedge2_weights, wedge3, weight_space,
)


def test_irreducible_formulas():
    # h a_i = (n - 2i) a_i, e a_i = (n - i + 1) a_(i-1), f a_i = (i + 1) a_(i+1)
    A = irreducible(3)
    assert A.H.diagonal() == [3, 1, -1, -3]
    assert A.E[0, 1] == 3 and A.E[1, 2] == 2 and A.E[2, 3] == 1
    assert A.F[1, 0] == 1 and A.F[2, 1] == 2 and A.F[3, 2] == 3


def test_relations_checked():
    A = irreducible(2)
    with pytest.raises(ValueError):
        Sl2Action(A.H, A.E * 2, A.F)


def test_clebsch_gordan_small():
    assert clebsch_gordan(1, 1) == [2, 0]
    assert clebsch_gordan(2, 3) == [5, 3, 1]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8))
def test_tensor_decomposition_matches_cg(m, n):
    assert decompose(tensor(irreducible(m), irreducible(n))).weights() == clebsch_gordan(m, n)


def test_wedge2_of_v10():
    assert wedge2_weights(10) == [18, 14, 10, 6, 2]
    assert decompose(wedge2(irreducible(10))).weights() == [18, 14, 10, 6, 2]


@pytest.mark.parametrize("n", range(0, 7))
def test_wedge_dims(n):
    W2, W3 = wedge2(irreducible(n)), wedge3(irreducible(n))
    assert decompose(W2).dim == (n + 1) * n // 2
    assert decompose(W3).dim == (n + 1) * n * (n - 1) // 6


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=4))
def test_direct_sum_additive(ns):
    A = direct_sum(*(irreducible(n) for n in ns))
    assert decompose(A).weights() == sorted(ns, reverse=True)


def test_nondiagonal_action():
    # conjugate V(2) + V(0) by a unipotent change of basis
    A = direct_sum(irreducible(2), irreducible(0))
    P = Matrix.from_dense([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    Pi = Matrix.from_dense([[1, 0, 0, -1], [0, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]])
    B = Sl2Action(P @ A.H @ Pi, P @ A.E @ Pi, P @ A.F @ Pi)
    assert decompose(B).weights() == [2, 0]


def test_hw_and_weight_spaces():
    A = direct_sum(irreducible(2), irreducible(2))
    assert highest_weight_vectors(A, 2).dim == 2
    assert weight_space(A, 0).dim == 2
    S = submodule_generated(A, [[1, 0, 0, 0, 0, 0]])
    assert S.dim == 3 and is_submodule(A, S)
    assert not is_submodule(A, Subspace(6, [[0, 1, 0, 0, 0, 0]]))


def test_adjoint_is_v2():
    L = sl2_algebra()
    A = Sl2Action(*(L.ad({i: 1}) for i in range(3)))
    assert decompose(A).weights() == [2]
