from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leviext.fixtures import abelian, dl8, glued_l0_h1, heisenberg, standard_filiform
from leviext.lie import (
    LieAlgebra, center, derivation_algebra, derived_series, is_derivation, is_ideal, is_nilpotent,
    is_semisimple, is_solvable, killing_form, lower_central_series, matrix_lie_tests, nilindex,
    quotient, type_of, verify_jacobi,
)
from leviext.linalg import Matrix, Subspace
from leviext.sl2 import sl2_algebra


def e(n, *idx):
    v = [0] * n
    for i in idx:
        v[i] = 1
    return v


def test_heisenberg_bracket():
    # [PAPER] [x, y] = z in h1
    h = heisenberg(1)
    assert h.bracket(e(3, 0), e(3, 1)) == e(3, 2)
    assert h.bracket(e(3, 1), e(3, 0)) == [0, 0, -1]


def test_dl8_first_product():
    # [PAPER] [a1, a2] = -[a3, a4] = a5
    L = dl8()
    assert L.bracket(e(8, 0), e(8, 1)) == e(8, 4)
    assert L.bracket(e(8, 2), e(8, 3)) == [0, 0, 0, 0, -1, 0, 0, 0]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=8, max_size=8))
def test_self_bracket_zero(v):
    assert not any(dl8().bracket(v, v))


def test_bracket_length_check():
    with pytest.raises(ValueError):
        heisenberg(1).bracket([1, 0], [0, 1, 0])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_jacobi_passes_on_heisenberg(n):
    assert verify_jacobi(heisenberg(n)) == []


def test_jacobi_passes_on_abelian_and_fixtures():
    for L in (abelian(4), dl8(), glued_l0_h1(), standard_filiform(6), sl2_algebra()):
        assert verify_jacobi(L) == []


def test_semidirect_example_satisfies_jacobi():
    # [DERIVED] [b1,b2]=b3, [b1,b3]=b2, [b2,b3]=0 is ad(b1) acting on an abelian ideal:
    # J(b1,b2,b3) = [b3,b3] + [0,b1] + [-b2,b2] = 0
    L = LieAlgebra(3, {(0, 1, 2): 1, (0, 2, 1): 1})
    assert verify_jacobi(L) == []


def test_jacobi_failure_localized():
    # [DERIVED] [b1,b2]=b1, [b1,b3]=b1, [b2,b3]=b2:
    # J(b1,b2,b3) = [b1,b3] + [b2,b1] + [-b1,b2] = b1 - b1 - b1 = -b1
    L = LieAlgebra(3, {(0, 1, 0): 1, (0, 2, 0): 1, (1, 2, 1): 1})
    bad = verify_jacobi(L)
    assert len(bad) == 1
    i, j, k, res = bad[0]
    assert (i, j, k) == (0, 1, 2)
    assert res == {0: Fraction(-1)}


def test_duplicate_and_bad_indices_rejected():
    with pytest.raises(ValueError):
        LieAlgebra(2, [(0, 1, 0, 1), (0, 1, 0, 2)])
    with pytest.raises(ValueError):
        LieAlgebra(2, {(1, 0, 0): 1})


def test_from_brackets_antisymmetrizes():
    L = LieAlgebra.from_brackets(3, {(1, 0): {2: 1}})
    assert L.bracket(e(3, 0), e(3, 1)) == [0, 0, -1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_series(n):
    h = heisenberg(n)
    assert [s.dim for s in lower_central_series(h)] == [2 * n + 1, 1, 0]
    assert nilindex(h) == 2 and type_of(h) == 2 * n
    assert center(h) == Subspace(2 * n + 1, [e(2 * n + 1, 2 * n)])
    assert h.is_graded


def test_abelian_series():
    A = abelian(4)
    assert [s.dim for s in lower_central_series(A)] == [4, 0]
    assert nilindex(A) == 1 and type_of(A) == 4


def test_dl8_series_and_center():
    # [DERIVED] sweep of the listed products
    L = dl8()
    assert [s.dim for s in lower_central_series(L)] == [8, 4, 2, 0]
    assert nilindex(L) == 3
    assert center(L) == Subspace(8, [e(8, 6), e(8, 7)])


def test_nilindex_undefined_for_sl2():
    with pytest.raises(ValueError):
        nilindex(sl2_algebra())
    assert not is_nilpotent(sl2_algebra()) and not is_solvable(sl2_algebra())


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_filiform_maximal_nilindex(n):
    F = standard_filiform(n)
    assert nilindex(F) == n - 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_derivation_dim(n):
    # [PAPER] dim Der h_n = dim sp_2n + (2n+1) = n(2n+1) + 2n + 1
    assert len(derivation_algebra(heisenberg(n))) == (n + 1) * (2 * n + 1)


def test_derivation_basis_members_are_derivations():
    L = dl8()
    D = derivation_algebra(L)
    assert len(D) == 12
    assert all(is_derivation(L, X) for X in D)
    assert not is_derivation(L, Matrix.identity(8))


def test_der_h1_not_solvable_and_dl8_der_nilpotent():
    assert not matrix_lie_tests(derivation_algebra(heisenberg(1))).solvable
    r = matrix_lie_tests(derivation_algebra(dl8()))
    assert r.closed and r.nilpotent


def test_characteristic_ideals_invariant_under_der():
    # center and lcs terms are stable under every derivation
    for L in (dl8(), heisenberg(2), standard_filiform(5)):
        subs = [center(L)] + lower_central_series(L) + derived_series(L)
        for X in derivation_algebra(L):
            for S in subs:
                assert S.is_invariant(X)


def test_killing_sl2():
    # [DERIVED] basis h, e, f: K(h,h) = 8, K(e,f) = 4
    K = killing_form(sl2_algebra())
    assert K.to_lists() == [[8, 0, 0], [0, 0, 4], [0, 4, 0]]
    assert is_semisimple(sl2_algebra())
    assert not is_semisimple(heisenberg(1))


def test_quotient_by_center():
    h = heisenberg(2)
    Q, P = quotient(h, center(h))
    assert Q.dim == 4 and Q.is_abelian()
    with pytest.raises(ValueError):
        quotient(h, Subspace(5, [e(5, 0)]))
    assert is_ideal(h, center(h))
