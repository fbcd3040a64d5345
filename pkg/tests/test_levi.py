import warnings

import pytest

from leviext.fixtures import abelian, dl8, glued_l0_h1, heisenberg
from leviext.free import free_nilpotent
from leviext.levi import (
    GraphQuotientFailure, Representation, cn_extension, extend_to_free, free_sl2_action, glue,
    heisenberg_quotient, make_s_ideal, metabelian_quotients, quasi_cyclic_quotient, quotient_with_levi,
    s_ideal_closure, sl2_representation, nonhomogeneous_graph_quotient, verify_snobl_layers,
)
from leviext.lie import lower_central_series, nilindex, type_of, verify_jacobi
from leviext.linalg import Matrix, Subspace
from leviext.sl2 import decompose, irreducible, sl2_algebra


def h1_glue():
    return glue(sl2_algebra(), heisenberg(1), Representation(sl2_algebra(), [
        Matrix.from_entries(3, 3, {(0, 0): 1, (1, 1): -1}),
        Matrix.from_entries(3, 3, {(0, 1): 1}),
        Matrix.from_entries(3, 3, {(1, 0): 1}),
    ]))


def test_glue_matches_fixture_table():
    # [PAPER] nonzero products xy=z, hx=x, hy=-y, ey=x, fx=y, he=2e, hf=-2f, ef=h
    G = h1_glue()
    assert sorted(G.algebra.constants()) == sorted(glued_l0_h1().constants())
    assert Subspace.coordinate(6, G.n_block) == G.n_subspace()


def test_glue_rejects_non_derivation():
    I3 = Matrix.identity(3)
    rep = Representation(sl2_algebra(), [I3, Matrix.zeros(3), Matrix.zeros(3)], check=False)
    with pytest.raises(ValueError):
        glue(sl2_algebra(), heisenberg(1), rep)


def test_split_null_extension():
    A = irreducible(3)
    G = glue(sl2_algebra(), abelian(4), sl2_representation(A))
    assert verify_jacobi(G.algebra) == []
    assert verify_snobl_layers(G).layers == [[3]]


def test_glue_nonsemisimple_warns():
    S = abelian(1)
    rep = Representation(S, [Matrix.zeros(2)])
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        glue(S, abelian(2), rep)
    assert w


def test_extension_to_free_faithful_and_trivial():
    F = free_nilpotent(2, 3)
    rep = extend_to_free(F, sl2_representation(irreducible(1)))
    assert rep.faithful
    triv = extend_to_free(F, Representation(sl2_algebra(), [Matrix.zeros(2)] * 3))
    assert triv.is_trivial()


def test_degree_two_weights_v10():
    F = free_nilpotent(11, 2)
    A = free_sl2_action(F, irreducible(10))
    assert decompose(A, within=F.degree_subspace(2)).weights() == [18, 14, 10, 6, 2]


def test_s_ideal_closure_examples():
    F = free_nilpotent(2, 3)
    rep = extend_to_free(F, sl2_representation(irreducible(1)))
    J = F.degree_subspace(2)
    I = s_ideal_closure(F, rep, J)
    assert I.subspace == F.at_least(2)
    assert s_ideal_closure(F, rep, Subspace(F.dim)).subspace.dim == 0
    assert s_ideal_closure(F, rep, I.subspace).subspace == I.subspace


def test_quotient_with_levi_recovers_l0h1():
    F = free_nilpotent(2, 2)
    rep = extend_to_free(F, sl2_representation(irreducible(1)))
    Q = quotient_with_levi(F, rep, make_s_ideal(F, rep, Subspace(F.dim)))
    assert Q.glued.algebra.dim == 6
    assert verify_jacobi(Q.glued.algebra) == []
    assert [s.dim for s in lower_central_series(Q.algebra)] == [3, 1, 0]


def test_nilindex_collapse_reported():
    F = free_nilpotent(2, 3)
    rep = extend_to_free(F, sl2_representation(irreducible(1)))
    with pytest.raises(ValueError, match="nilindex collapsed"):
        quotient_with_levi(F, rep, make_s_ideal(F, rep, F.degree_subspace(3)))


def test_quasi_cyclic_homogeneous():
    F = free_nilpotent(3, 3)
    rep = extend_to_free(F, sl2_representation(irreducible(2)))
    Q = quasi_cyclic_quotient(F, rep, Subspace(F.dim), Subspace(F.dim))
    assert Q.algebra.dim == F.dim and Q.ideal.is_homogeneous


def test_metabelian_family():
    qs = metabelian_quotients(direct_sum_v2_v0())
    assert sorted(q.algebra.dim for q in qs) == [7, 7, 7, 7, 10]
    for q in qs:
        assert q.rep.faithful
        assert nilindex(q.algebra) == 2 and type_of(q.algebra) == 4


def direct_sum_v2_v0():
    from leviext.sl2 import direct_sum
    return direct_sum(irreducible(2), irreducible(0))


def test_layers_of_glued_h1():
    rep = verify_snobl_layers(h1_glue())
    assert rep.ok and rep.layers == [[1], [0]]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_quotient(n):
    Q, ev = heisenberg_quotient(n)
    assert Q.dim == 2 * n + 1
    assert ev.ideal_dim == (2 * n) * (2 * n - 1) // 2 - 1
    assert ev.center_dim == 1 and ev.center_is_derived and ev.form_rank == 2 * n
    assert ev.isomorphic_to_standard and ev.symplectic_descend
    assert ev.symplectic_dim == n * (2 * n + 1)


def test_graph_quotient_precondition_errors():
    with pytest.raises(ValueError):
        nonhomogeneous_graph_quotient(4, 2, lam=0)
    with pytest.raises(GraphQuotientFailure):
        nonhomogeneous_graph_quotient(1, 0)


def test_cn_extension_dl8():
    ext = cn_extension(dl8(), [0, 0, 0, 0, 0, 0, 1, 0], 1)
    L = ext.algebra
    assert L.dim == 10 and nilindex(L) == 3
    assert ext.symplectic_are_derivations and ext.der_nilpotent and ext.nilpotent_part_is_nilpotent
    assert decompose(ext.sl2).weights() == [1] + [0] * 8
    assert cn_extension(dl8(), [0] * 6 + [1, 0], 0).algebra is not None
    with pytest.raises(ValueError):
        cn_extension(dl8(), [1, 0, 0, 0, 0, 0, 0, 0], 1)
