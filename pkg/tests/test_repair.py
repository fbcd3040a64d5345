from fractions import Fraction

from leviext.fixtures import glued_l0_h1, table2, table2_action
from leviext.lie import LieAlgebra, lower_central_series, verify_jacobi
from leviext.repair import apply_diff, repair_equivariant
from leviext.sl2 import direct_sum, irreducible, is_equivariant_bilinear


def test_table2_repair():
    L, A = table2(), table2_action()
    assert is_equivariant_bilinear(A, L)
    res = repair_equivariant(L, A)
    assert res is not None
    # [v5, w10] coefficient of x8: c 6 22 46
    assert res.diff == [(5, 21, 45, Fraction(-3, 13), Fraction(-33, 13))]
    assert is_equivariant_bilinear(A, res.algebra) == []
    assert verify_jacobi(res.algebra) == []
    assert [s.dim for s in lower_central_series(res.algebra)] == [52, 41, 15, 0]
    assert "[v5,w10] x8" in res.lines()[0]


def test_repair_noop_when_equivariant():
    # V(1) + V(1) + V(0) carries the wedge bracket onto the invariant line
    A = direct_sum(irreducible(1), irreducible(1), irreducible(0))
    L = LieAlgebra(5, {(0, 3, 4): 1, (1, 2, 4): -1})
    assert repair_equivariant(L, A) is None


def test_repair_recovers_planted_error():
    A = direct_sum(irreducible(1), irreducible(1), irreducible(0))
    good = LieAlgebra(5, {(0, 3, 4): 1, (1, 2, 4): -1})
    assert is_equivariant_bilinear(A, good) == []
    bad = apply_diff(good, {(1, 2, 4): Fraction(-2)})
    res = repair_equivariant(bad, A)
    # one constant changes and the equivariant ratio c(2,3,5) / c(1,4,5) = -1 is restored
    assert len(res.diff) == 1
    fixed = {(i, j, k): c for i, j, k, c in res.algebra.constants()}
    assert fixed[(1, 2, 4)] == -fixed[(0, 3, 4)]
    assert is_equivariant_bilinear(A, res.algebra) == []


def test_apply_diff_deletes_zero():
    L = apply_diff(glued_l0_h1(), {(3, 4, 5): 0})
    assert (3, 4) not in {(i, j) for i, j, _, _ in L.constants()}
