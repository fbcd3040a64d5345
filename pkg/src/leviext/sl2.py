"""Finite-dimensional sl2-modules given by the matrices of h, e, f."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .lie import LieAlgebra, derivation_violations
from .linalg import Matrix, Subspace, _kernel_vectors, invariant_closure

__all__ = [
    "Sl2Action",
    "Sl2Decomposition",
    "sl2_algebra",
    "irreducible",
    "direct_sum",
    "tensor",
    "wedge2",
    "wedge3",
    "restrict_action",
    "quotient_action",
    "decompose",
    "layered_weights",
    "clebsch_gordan",
    "wedge2_weights",
    "is_equivariant_bilinear",
    "submodule_generated",
    "is_submodule",
    "weight_space",
    "highest_weight_vectors",
]


class Sl2Action:
    """Matrices H, E, F on a common space obeying [H,E]=2E, [H,F]=-2F, [E,F]=H."""

    __slots__ = ("H", "E", "F")

    def __init__(self, H: Matrix, E: Matrix, F: Matrix, check: bool = True):
        n = H.nrows
        for M in (H, E, F):
            if M.shape != (n, n):
                raise ValueError("H, E, F must be square of the same size")
        if check:
            if H @ E - E @ H != E * 2:
                raise ValueError("sl2 relation [H,E] = 2E fails")
            if H @ F - F @ H != F * -2:
                raise ValueError("sl2 relation [H,F] = -2F fails")
            if E @ F - F @ E != H:
                raise ValueError("sl2 relation [E,F] = H fails")
        self.H, self.E, self.F = H, E, F

    @property
    def dim(self) -> int:
        return self.H.nrows

    def matrices(self) -> tuple:
        return (self.H, self.E, self.F)

    def named(self) -> list:
        return [("H", self.H), ("E", self.E), ("F", self.F)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sl2Action):
            return NotImplemented
        return self.matrices() == other.matrices()

    def __repr__(self) -> str:
        return f"<Sl2Action dim={self.dim}>"


def sl2_algebra() -> LieAlgebra:
    """sl2 in the basis (h, e, f)."""
    return LieAlgebra(3, {(0, 1, 1): 2, (0, 2, 2): -2, (1, 2, 0): 1}, labels=("h", "e", "f"), name="sl2")


def irreducible(n: int) -> Sl2Action:
    """V(n) on a_0..a_n: h a_i = (n-2i) a_i, e a_i = (n-i+1) a_{i-1}, f a_i = (i+1) a_{i+1}."""
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    d = n + 1
    H = Matrix.from_entries(d, d, {(i, i): n - 2 * i for i in range(d)})
    E = Matrix.from_entries(d, d, {(i - 1, i): n - i + 1 for i in range(1, d)})
    F = Matrix.from_entries(d, d, {(i + 1, i): i + 1 for i in range(d - 1)})
    return Sl2Action(H, E, F, check=False)


def _block_diag(mats: Sequence[Matrix]) -> Matrix:
    rows = []
    off = 0
    total = sum(M.ncols for M in mats)
    for M in mats:
        for r in M._rows:
            rows.append({off + j: c for j, c in r.items()})
        off += M.ncols
    return Matrix._wrap(total, total, rows)


def direct_sum(*actions: Sl2Action) -> Sl2Action:
    return Sl2Action(*(_block_diag([a.matrices()[k] for a in actions]) for k in range(3)), check=False)


def _kron_sum(X: Matrix, Y: Matrix) -> Matrix:
    """X (x) I + I (x) Y on pairs (i, j) -> i * dim Y + j."""
    p, q = X.nrows, Y.nrows
    Xc, Yc = X._columns(), Y._columns()
    cols = []
    for i in range(p):
        for j in range(q):
            col = {a * q + j: c for a, c in Xc[i].items()}
            for b, c in Yc[j].items():
                k = i * q + b
                v = col.get(k, 0) + c
                if v:
                    col[k] = v
                else:
                    col.pop(k, None)
            cols.append(col)
    return Matrix.from_columns(p * q, cols)


def tensor(A: Sl2Action, B: Sl2Action) -> Sl2Action:
    return Sl2Action(*(_kron_sum(x, y) for x, y in zip(A.matrices(), B.matrices())), check=False)


def _wedge_index(k: int, n: int):
    basis = list(combinations(range(n), k))
    return basis, {t: i for i, t in enumerate(basis)}


def _wedge_map(X: Matrix, k: int) -> Matrix:
    n = X.nrows
    basis, index = _wedge_index(k, n)
    Xc = X._columns()
    cols = []
    for t in basis:
        col: dict = {}
        for pos, i in enumerate(t):
            for a, c in Xc[i].items():
                new = list(t)
                new[pos] = a
                if len(set(new)) < k:
                    continue
                # sign of the sorting permutation
                sign = 1
                for x, y in combinations(new, 2):
                    if x > y:
                        sign = -sign
                key = index[tuple(sorted(new))]
                v = col.get(key, 0) + sign * c
                if v:
                    col[key] = v
                else:
                    col.pop(key, None)
        cols.append(col)
    return Matrix.from_columns(len(basis), cols)


def wedge2(A: Sl2Action) -> Sl2Action:
    """Action on the exterior square, basis e_i ^ e_j with i < j in lexicographic order."""
    return Sl2Action(*(_wedge_map(X, 2) for X in A.matrices()), check=False)


def wedge3(A: Sl2Action) -> Sl2Action:
    return Sl2Action(*(_wedge_map(X, 3) for X in A.matrices()), check=False)


def _require_invariant(A: Sl2Action, S: Subspace) -> None:
    if S.ambient_dim != A.dim:
        raise ValueError("subspace lives in the wrong ambient space")
    if not all(S.is_invariant(X) for X in A.matrices()):
        raise ValueError("subspace is not invariant under the action")


def restrict_action(A: Sl2Action, S: Subspace, check: bool = True) -> Sl2Action:
    """Action on an invariant subspace, in the coordinates of its RREF basis."""
    if check:
        _require_invariant(A, S)
    vs = S.vectors()
    mats = []
    for X in A.matrices():
        cols = []
        for v in vs:
            w = X.apply(v)
            cols.append({r: w[p] for r, p in enumerate(S.pivots) if p in w})
        mats.append(Matrix.from_columns(S.dim, cols))
    return Sl2Action(*mats, check=False)


def quotient_action(A: Sl2Action, S: Subspace, check: bool = True) -> Sl2Action:
    """Action on ``V / S`` in the canonical complement coordinates of S."""
    if check:
        _require_invariant(A, S)
    keep = S.complement_pivots()
    pos = {c: a for a, c in enumerate(keep)}
    mats = []
    for X in A.matrices():
        Xc = X._columns()
        cols = []
        for c in keep:
            r = S.reduce(Xc[c])
            cols.append({pos[k]: x for k, x in r.items()})
        mats.append(Matrix.from_columns(len(keep), cols))
    return Sl2Action(*mats, check=False)


@dataclass(frozen=True)
class Sl2Decomposition:
    """Isotypic data: ``summands`` is a list of ``(n, multiplicity, highest-weight space)``, n descending."""

    summands: tuple

    def weights(self) -> list:
        out = []
        for n, mult, _ in self.summands:
            out.extend([n] * mult)
        return out

    def multiplicity(self, n: int) -> int:
        for w, mult, _ in self.summands:
            if w == n:
                return mult
        return 0

    def hw_space(self, n: int) -> Subspace | None:
        for w, _, S in self.summands:
            if w == n:
                return S
        return None

    @property
    def dim(self) -> int:
        return sum(mult * (n + 1) for n, mult, _ in self.summands)


def _gershgorin_bound(H: Matrix) -> int:
    b = 0
    for r in H._rows:
        s = sum(abs(c) for c in r.values())
        b = max(b, int(s) + 1)
    return b


def highest_weight_vectors(A: Sl2Action, n: int, within: Subspace | None = None) -> Subspace:
    """``ker E  ∩  ker(H - n)``, optionally intersected with a subspace."""
    return _hw(A, n, within)


def _hw(A: Sl2Action, n: int, within: Subspace | None) -> Subspace:
    dim = A.dim
    H, E = A.H, A.E
    if within is None and H.is_diagonal():
        idx = [i for i, h in enumerate(H.diagonal()) if h == n]
        Ec = E._columns()
        rows: dict = {}
        for a, i in enumerate(idx):
            for r, c in Ec[i].items():
                rows.setdefault(r, {})[a] = c
        ker = _kernel_vectors(rows.values(), len(idx))
        return Subspace(dim, ({idx[a]: c for a, c in v.items()} for v in ker))
    eqs = []
    for r in range(dim):
        hr = dict(H._rows[r])
        hr[r] = hr.get(r, 0) - n
        hr = {k: v for k, v in hr.items() if v}
        if hr:
            eqs.append(hr)
        if E._rows[r]:
            eqs.append(dict(E._rows[r]))
    S = Subspace(dim, _kernel_vectors(eqs, dim))
    if within is not None:
        S = S.intersect(within)
    return S


def weight_space(A: Sl2Action, n: int, within: Subspace | None = None) -> Subspace:
    dim = A.dim
    eqs = []
    for r in range(dim):
        hr = dict(A.H._rows[r])
        hr[r] = hr.get(r, 0) - n
        hr = {k: v for k, v in hr.items() if v}
        if hr:
            eqs.append(hr)
    S = Subspace(dim, _kernel_vectors(eqs, dim))
    return S.intersect(within) if within is not None else S


def decompose(A: Sl2Action, within: Subspace | None = None) -> Sl2Decomposition:
    """Multiplicity of V(n) is ``dim(ker E ∩ ker(H - n))``; weights are found by integer shifts only.

    With ``within`` (an invariant subspace), the decomposition of that submodule.
    """
    if within is not None:
        _require_invariant(A, within)
        total = within.dim
    else:
        total = A.dim
    if A.H.is_diagonal() and within is None:
        diag = A.H.diagonal()
        if any(h.denominator != 1 for h in diag):
            raise ValueError("not an algebraic sl2 action: non-integer H eigenvalue")
        candidates = sorted({int(h) for h in diag if h >= 0}, reverse=True)
    else:
        candidates = range(_gershgorin_bound(A.H), -1, -1)
    summands = []
    for n in candidates:
        S = _hw(A, n, within)
        if S.dim:
            summands.append((n, S.dim, S))
    dec = Sl2Decomposition(tuple(summands))
    if dec.dim != total:
        raise ValueError("not an algebraic sl2 action: weight bookkeeping does not add up")
    return dec


def layered_weights(A: Sl2Action, blocks: Sequence[Subspace]) -> list:
    """Weights of each invariant block in turn, each block's weights descending."""
    out = []
    for S in blocks:
        out.extend(decompose(A, within=S).weights())
    return out


def clebsch_gordan(m: int, n: int) -> list:
    if m < 0 or n < 0:
        raise ValueError("weights must be non-negative")
    return [m + n - 2 * i for i in range(min(m, n) + 1)]


def wedge2_weights(n: int) -> list:
    return [w for w in range(2 * n - 2, -1, -4)]


def is_equivariant_bilinear(A: Sl2Action, L: LieAlgebra) -> list:
    """Violations ``(name, i, j, residual)`` of Leibniz for H, E, F on L's bracket; empty means pass."""
    if A.dim != L.dim:
        raise ValueError("action and algebra have different dimensions")
    out = []
    for name, X in A.named():
        for i, j, res in derivation_violations(L, X):
            out.append((name, i, j, res))
    return out


def submodule_generated(A: Sl2Action, vectors: Iterable) -> Subspace:
    return invariant_closure(A.dim, vectors, A.matrices())


def is_submodule(A: Sl2Action, S: Subspace) -> bool:
    return S.ambient_dim == A.dim and all(S.is_invariant(X) for X in A.matrices())
