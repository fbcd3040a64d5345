"""Lie algebras given by sparse structure constants over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Subspace, _axpy, _kernel_vectors, dense, rank, sparse, to_fraction

__all__ = [
    "LieAlgebra",
    "verify_jacobi",
    "bracket_span",
    "lower_central_series",
    "derived_series",
    "center",
    "nilindex",
    "type_of",
    "is_nilpotent",
    "is_solvable",
    "is_derivation",
    "derivation_violations",
    "derivation_algebra",
    "MatrixLieReport",
    "matrix_lie_tests",
    "matrix_algebra",
    "killing_form",
    "is_semisimple",
    "cartan_solvable",
    "is_ideal",
    "quotient",
    "ad",
]


class LieAlgebra:
    """Finite-dimensional Lie algebra with structure constants ``c(i, j, k)``, ``i < j``.

    ``[b_i, b_j] = sum_k c(i, j, k) b_k``.  Only pairs with ``i < j`` are
    stored; ``[b_j, b_i]`` is read off with a sign flip and ``[b_i, b_i] = 0``.
    The Jacobi identity is not enforced here; see :func:`verify_jacobi`.
    """

    def __init__(
        self,
        dim: int,
        constants: Mapping[tuple, object] | Iterable[tuple] = (),
        labels: Sequence[str] | None = None,
        grade: Sequence[int] | None = None,
        name: str | None = None,
    ):
        if dim < 0:
            raise ValueError("negative dimension")
        self.dim = dim
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i + 1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("one label per basis vector required")
        if grade is not None:
            grade = tuple(int(g) for g in grade)
            if len(grade) != dim or any(g < 1 for g in grade):
                raise ValueError("grade must list a positive degree per basis vector")
        self.grade = grade
        items = constants.items() if isinstance(constants, Mapping) else ((t[:3], t[3]) for t in constants)
        table: dict = {}
        for (i, j, k), c in items:
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise ValueError(f"bad structure-constant index ({i}, {j}, {k})")
            c = to_fraction(c)
            if not c:
                continue
            row = table.setdefault((i, j), {})
            if k in row:
                raise ValueError(f"duplicate structure constant ({i}, {j}, {k})")
            row[k] = c
        self._table = table
        right = [dict() for _ in range(dim)]
        for (i, j), vec in table.items():
            right[i][j] = vec
            right[j][i] = {k: -c for k, c in vec.items()}
        self._right = right

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple, Mapping[int, object]], **kw) -> "LieAlgebra":
        """Build from ``{(i, j): {k: c}}`` with either index order; ``(j, i)`` entries are negated."""
        flat: dict = {}
        for (i, j), vec in brackets.items():
            if i == j:
                raise ValueError("[b_i, b_i] is zero by antisymmetry")
            s = 1 if i < j else -1
            a, b = min(i, j), max(i, j)
            for k, c in vec.items():
                c = to_fraction(c) * s
                key = (a, b, k)
                flat[key] = flat.get(key, 0) + c
        return cls(dim, {k: v for k, v in flat.items() if v}, **kw)

    def constants(self):
        """Yield ``(i, j, k, c)`` with ``i < j`` in sorted order."""
        for (i, j) in sorted(self._table):
            vec = self._table[(i, j)]
            for k in sorted(vec):
                yield i, j, k, vec[k]

    def bracket_basis(self, i: int, j: int) -> dict:
        return dict(self._right[i].get(j, {}))

    def _br(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict:
        acc: dict = {}
        right = self._right
        for i, a in x.items():
            row = right[i]
            if not row:
                continue
            if len(row) <= len(y):
                for j, vec in row.items():
                    b = y.get(j)
                    if b:
                        _axpy(acc, a * b, vec)
            else:
                for j, b in y.items():
                    vec = row.get(j)
                    if vec:
                        _axpy(acc, a * b, vec)
        return acc

    def bracket(self, x, y) -> list:
        """Bilinear antisymmetric bracket of two coordinate vectors."""
        x, y = list(x), list(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return dense(self._br(sparse(x), sparse(y)), self.dim)

    @property
    def is_graded(self) -> bool:
        if self.grade is None:
            return False
        g = self.grade
        return all(g[k] == g[i] + g[j] for (i, j), vec in self._table.items() for k in vec)

    def is_abelian(self) -> bool:
        return not self._table

    def ad(self, x) -> Matrix:
        sx = x if isinstance(x, dict) else sparse(x)
        cols = [self._br(sx, {j: Fraction(1)}) for j in range(self.dim)]
        return Matrix.from_columns(self.dim, cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(self.constants())))

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<LieAlgebra{nm} dim={self.dim} nnz={sum(len(v) for v in self._table.values())}>"

    def relabel(self, labels: Sequence[str], name: str | None = None) -> "LieAlgebra":
        return LieAlgebra(self.dim, {(i, j, k): c for i, j, k, c in self.constants()},
                          labels=labels, grade=self.grade, name=name or self.name)


def ad(L: LieAlgebra, i: int) -> Matrix:
    """Matrix of ``ad b_i``."""
    return L.ad({i: Fraction(1)})


def verify_jacobi(L: LieAlgebra) -> list:
    """Exhaustive Jacobi sweep over ``i < j < k``.

    Returns the list of violations ``(i, j, k, residual)``; empty means pass.
    """
    n = L.dim
    e = [{i: Fraction(1)} for i in range(n)]
    bad = []
    br = L._br
    prod = {}
    for (i, j), vec in L._table.items():
        prod[(i, j)] = vec
    for i, j, k in combinations(range(n), 3):
        a = prod.get((i, j))
        b = prod.get((j, k))
        c = prod.get((i, k))
        if a is None and b is None and c is None:
            continue
        res: dict = {}
        if a:
            _axpy(res, Fraction(1), br(a, e[k]))
        if b:
            _axpy(res, Fraction(1), br(b, e[i]))
        if c:
            # [[b_k, b_i], b_j] = -[[b_i, b_k], b_j]
            _axpy(res, Fraction(-1), br(c, e[j]))
        if res:
            bad.append((i, j, k, res))
    return bad


def bracket_span(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """Span of ``[a, b]`` over basis vectors of A and B."""
    av, bv = A.vectors(), B.vectors()
    return Subspace(L.dim, (L._br(a, b) for a in av for b in bv))


def _series(L: LieAlgebra, derived: bool) -> list:
    full = Subspace.full(L.dim)
    terms = [full]
    while terms[-1].dim:
        nxt = bracket_span(L, terms[-1] if derived else full, terms[-1])
        if nxt.dim == terms[-1].dim:
            break
        terms.append(nxt)
    return terms


def lower_central_series(L: LieAlgebra) -> list:
    """``[L, L^2, L^3, ...]`` ending with the zero space, or with the stable term if not nilpotent."""
    return _series(L, derived=False)


def derived_series(L: LieAlgebra) -> list:
    return _series(L, derived=True)


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def nilindex(L: LieAlgebra) -> int:
    """Largest t with ``L^t != 0``."""
    lcs = lower_central_series(L)
    if lcs[-1].dim:
        raise ValueError("nilindex is undefined: the algebra is not nilpotent")
    return len(lcs) - 1


def type_of(L: LieAlgebra) -> int:
    """``dim L / L^2``."""
    return L.dim - bracket_span(L, Subspace.full(L.dim), Subspace.full(L.dim)).dim


def center(L: LieAlgebra) -> Subspace:
    n = L.dim
    rows: dict = {}
    for (i, j), vec in L._table.items():
        for k, c in vec.items():
            rows.setdefault((j, k), {})[i] = c
            rows.setdefault((i, k), {})[j] = -c
    return Subspace(n, _kernel_vectors(rows.values(), n))


def derivation_violations(L: LieAlgebra, d: Matrix, first_only: bool = False) -> list:
    """Basis pairs ``(i, j, residual)`` where ``d[b_i, b_j] != [d b_i, b_j] + [b_i, d b_j]``."""
    n = L.dim
    if d.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} map, got {d.shape}")
    cols = [d._columns()[j] for j in range(n)]
    right = L._right
    out = []
    for i in range(n):
        di = cols[i]
        for j in range(i + 1, n):
            res = d.apply(right[i][j]) if j in right[i] else {}
            res = dict(res)
            dj = cols[j]
            # -[d b_i, b_j] = sum_p di[p] [b_j, b_p]
            for p, c in di.items():
                vec = right[j].get(p)
                if vec:
                    _axpy(res, c, vec)
            # -[b_i, d b_j]
            for p, c in dj.items():
                vec = right[i].get(p)
                if vec:
                    _axpy(res, -c, vec)
            if res:
                out.append((i, j, res))
                if first_only:
                    return out
    return out


def is_derivation(L: LieAlgebra, d: Matrix) -> bool:
    return not derivation_violations(L, d, first_only=True)


def derivation_algebra(L: LieAlgebra) -> list:
    """Basis of ``Der L`` as matrices, canonical by RREF of the row-major vectorization.

    Unknown ``D[m][k]`` sits at index ``m * n + k``; Leibniz on every pair
    ``i < j`` gives one linear equation per output coordinate.
    """
    n = L.dim
    right = L._right
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            eq: dict = {}
            for k, c in right[i].get(j, {}).items():
                for m in range(n):
                    eq.setdefault(m, {})
                    key = m * n + k
                    eq[m][key] = eq[m].get(key, 0) + c
            # [D b_i, b_j] = sum_k D[k][i] [b_k, b_j]
            for k, vec in right[j].items():
                for m, c in vec.items():
                    row = eq.setdefault(m, {})
                    key = k * n + i
                    row[key] = row.get(key, 0) + c  # [b_k,b_j] = -[b_j,b_k]
            for k, vec in right[i].items():
                for m, c in vec.items():
                    row = eq.setdefault(m, {})
                    key = k * n + j
                    row[key] = row.get(key, 0) - c
            for row in eq.values():
                row = {k: v for k, v in row.items() if v}
                if row:
                    eqs.append(row)
    sol = Subspace(n * n, _kernel_vectors(eqs, n * n))
    return [Matrix.devectorize(v, n, n) for v in sol.vectors()]


@dataclass
class MatrixLieReport:
    closed: bool
    solvable: bool | None = None
    nilpotent: bool | None = None
    derived_dims: list = field(default_factory=list)
    lcs_dims: list = field(default_factory=list)


def _matrix_series(span: Subspace, n: int, derived: bool) -> list:
    mats = [Matrix.devectorize(v, n, n) for v in span.vectors()]
    terms = [span]
    cur = mats
    while terms[-1].dim:
        left = cur if derived else mats
        nxt = Subspace(n * n, ((a @ b - b @ a).vectorize() for a in left for b in cur))
        if nxt.dim == terms[-1].dim:
            break
        terms.append(nxt)
        cur = [Matrix.devectorize(v, n, n) for v in nxt.vectors()]
    return terms


def matrix_lie_tests(basis: Sequence[Matrix]) -> MatrixLieReport:
    """Closure under commutators, then solvability and nilpotency of the span."""
    if not basis:
        return MatrixLieReport(True, True, True, [0], [0])
    n = basis[0].nrows
    if any(b.shape != (n, n) for b in basis):
        raise ValueError("matrices must be square and of equal size")
    span = Subspace(n * n, (b.vectorize() for b in basis))
    for a, b in combinations(basis, 2):
        if not span.contains((a @ b - b @ a).vectorize()):
            return MatrixLieReport(False)
    der = _matrix_series(span, n, derived=True)
    lcs = _matrix_series(span, n, derived=False)
    return MatrixLieReport(
        True,
        solvable=der[-1].dim == 0,
        nilpotent=lcs[-1].dim == 0,
        derived_dims=[s.dim for s in der],
        lcs_dims=[s.dim for s in lcs],
    )


def matrix_algebra(basis: Sequence[Matrix], labels: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants of a commutator-closed span, in the given (independent) basis."""
    k = len(basis)
    if not k:
        return LieAlgebra(0)
    n = basis[0].nrows
    vecs = [b.vectorize() for b in basis]
    span = Subspace(n * n, vecs)
    if span.dim != k:
        raise ValueError("basis matrices are linearly dependent")
    piv = span.pivots
    # coordinates: v = sum_a x_a basis_a  <=>  P x = v[piv] with P[r][a] = basis_a[piv_r]
    P = Matrix.from_columns(k, [{r: v[p] for r, p in enumerate(piv) if p in v} for v in vecs])
    inv = _inverse(P)
    consts = {}
    for a in range(k):
        for b in range(a + 1, k):
            c = (basis[a] @ basis[b] - basis[b] @ basis[a]).vectorize()
            if not span.contains(c):
                raise ValueError("span is not closed under commutators")
            rhs = {r: c[p] for r, p in enumerate(piv) if p in c}
            for m, x in inv.apply(rhs).items():
                consts[(a, b, m)] = x
    return LieAlgebra(k, consts, labels=labels)


def _inverse(P: Matrix) -> Matrix:
    from .linalg import _Echelon

    k = P.nrows
    ech = _Echelon(2 * k)
    for i, r in enumerate(P._rows):
        row = dict(r)
        row[k + i] = Fraction(1)
        ech.add(row)
    if ech.pivots() != list(range(k)):
        raise ValueError("singular matrix")
    rows = [{j - k: c for j, c in ech.rows[i].items() if j >= k} for i in range(k)]
    return Matrix(k, k, rows)


def killing_form(L: LieAlgebra) -> Matrix:
    n = L.dim
    ads = [ad(L, i) for i in range(n)]
    entries = {}
    for i in range(n):
        for j in range(i, n):
            t = (ads[i] @ ads[j]).trace()
            if t:
                entries[(i, j)] = t
                entries[(j, i)] = t
    return Matrix.from_entries(n, n, entries)


def is_semisimple(L: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return L.dim > 0 and rank(killing_form(L)) == L.dim


def cartan_solvable(L: LieAlgebra) -> bool:
    """Cartan's criterion: ``K(L, [L, L]) = 0``."""
    K = killing_form(L)
    d = bracket_span(L, Subspace.full(L.dim), Subspace.full(L.dim))
    return all(not K.apply(v) for v in d.vectors())


def is_ideal(L: LieAlgebra, s: Subspace, generators: Iterable[int] | None = None) -> bool:
    """``[L, s] <= s``.

    With ``generators`` (basis indices generating L as an algebra), only
    ``[b_g, s]`` is tested; Jacobi then gives the rest.
    """
    if s.ambient_dim != L.dim:
        raise ValueError("subspace lives in the wrong ambient space")
    idx = range(L.dim) if generators is None else list(generators)
    vs = s.vectors()
    for g in idx:
        eg = {g: Fraction(1)}
        for v in vs:
            w = L._br(eg, v)
            if w and s.reduce(w):
                return False
    return True


def quotient(L: LieAlgebra, I: Subspace, check: bool = True) -> tuple:
    """``L / I`` on the canonical complement coordinates plus the projection matrix."""
    if check and not is_ideal(L, I):
        raise ValueError("not an ideal")
    keep = I.complement_pivots()
    pos = {c: a for a, c in enumerate(keep)}
    q = len(keep)

    def proj(v):
        r = I.reduce(v)
        return {pos[c]: x for c, x in r.items()}

    consts = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = L._table.get((keep[a], keep[b]))
            if w:
                for m, x in proj(w).items():
                    consts[(a, b, m)] = x
    grade = None
    if L.grade is not None:
        grade = [L.grade[c] for c in keep]
    Q = LieAlgebra(q, consts, labels=[L.labels[c] for c in keep], grade=grade,
                   name=f"{L.name}/I" if L.name else None)
    P = Matrix.from_columns(q, [proj({i: Fraction(1)}) for i in range(L.dim)])
    return Q, P


def homomorphism_violations(src: LieAlgebra, dst: LieAlgebra, phi: Matrix, pairs=None) -> list:
    """Pairs ``(i, j)`` with ``phi[b_i, b_j] != [phi b_i, phi b_j]``."""
    if phi.shape != (dst.dim, src.dim):
        raise ValueError("map has the wrong shape")
    cols = phi._columns()
    bad = []
    it = pairs if pairs is not None else combinations(range(src.dim), 2)
    for i, j in it:
        lhs = phi.apply(src._right[i].get(j, {}))
        rhs = dst._br(cols[i], cols[j])
        _axpy(lhs, Fraction(-1), rhs)
        if lhs:
            bad.append((i, j, lhs))
    return bad
