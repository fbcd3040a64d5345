"""Exact rational linear algebra over sparse rows.

Vectors are handled internally as sparse dicts ``{index: Fraction}`` with no
stored zeros.  The public entry points also accept dense sequences of ints,
Fractions or ``"p/q"`` strings.  Floats are rejected on purpose.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction, str]
SVec = dict  # dict[int, Fraction]

__all__ = [
    "Matrix",
    "Subspace",
    "to_fraction",
    "sparse",
    "dense",
    "rref",
    "kernel",
    "rank",
    "solve",
    "commutator",
    "invariant_closure",
]


def to_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"exact scalar required, got {type(x).__name__}")


def sparse(v) -> SVec:
    """Sparse copy of a dense sequence or mapping."""
    if isinstance(v, Mapping):
        out = {}
        for k, c in v.items():
            c = to_fraction(c)
            if c:
                out[int(k)] = c
        return out
    out = {}
    for k, c in enumerate(v):
        c = to_fraction(c)
        if c:
            out[k] = c
    return out


def dense(v: Mapping[int, Fraction], n: int) -> list:
    out = [Fraction(0)] * n
    for k, c in v.items():
        out[k] = c
    return out


def _axpy(acc: SVec, c: Fraction, v: Mapping[int, Fraction]) -> None:
    """acc += c * v, in place, dropping zeros."""
    if not c:
        return
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def _combine(terms: Iterable[tuple]) -> SVec:
    acc: SVec = {}
    for c, v in terms:
        _axpy(acc, c, v)
    return acc


class Matrix:
    """Immutable sparse rational matrix.

    Rows are stored as dicts.  Column views are built lazily and cached, which
    makes ``apply`` cheap for sparse vectors.
    """

    __slots__ = ("nrows", "ncols", "_rows", "_cols")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[Mapping] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative matrix dimension")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self._rows = tuple({} for _ in range(nrows))
        else:
            if len(rows) != nrows:
                raise ValueError("row count mismatch")
            built = []
            for r in rows:
                sr = sparse(r)
                if sr and (min(sr) < 0 or max(sr) >= ncols):
                    raise IndexError("column index out of range")
                built.append(sr)
            self._rows = tuple(built)
        self._cols = None

    @classmethod
    def _wrap(cls, nrows: int, ncols: int, rows) -> "Matrix":
        m = object.__new__(cls)
        m.nrows, m.ncols, m._rows, m._cols = nrows, ncols, tuple(rows), None
        return m

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Scalar]], ncols: int | None = None) -> "Matrix":
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(len(data), ncols, data)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Mapping[tuple, Scalar]) -> "Matrix":
        rows = [{} for _ in range(nrows)]
        for (i, j), c in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError((i, j))
            c = to_fraction(c)
            if c:
                rows[i][j] = c
        return cls._wrap(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, Fraction]]) -> "Matrix":
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, c in col.items():
                if c:
                    rows[i][j] = c
        return cls._wrap(nrows, len(columns), rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        return cls._wrap(nrows, nrows if ncols is None else ncols, [{} for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def devectorize(cls, v: Mapping[int, Fraction], nrows: int, ncols: int) -> "Matrix":
        rows = [{} for _ in range(nrows)]
        for k, c in v.items():
            rows[k // ncols][k % ncols] = c
        return cls._wrap(nrows, ncols, rows)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return self._rows[i].get(j, Fraction(0))

    def row(self, i: int) -> SVec:
        return dict(self._rows[i])

    def _columns(self):
        if self._cols is None:
            cols = [{} for _ in range(self.ncols)]
            for i, r in enumerate(self._rows):
                for j, c in r.items():
                    cols[j][i] = c
            self._cols = cols
        return self._cols

    def column(self, j: int) -> SVec:
        return dict(self._columns()[j])

    def rows(self) -> list:
        return [dict(r) for r in self._rows]

    def to_lists(self) -> list:
        return [dense(r, self.ncols) for r in self._rows]

    def entries(self):
        """Yield ``(i, j, value)`` for the nonzero entries in row-major order."""
        for i, r in enumerate(self._rows):
            for j in sorted(r):
                yield i, j, r[j]

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(self.ncols, self.nrows, [dict(c) for c in self._columns()])

    def apply(self, v) -> SVec:
        """Sparse product ``self @ v``."""
        if not isinstance(v, dict):
            v = sparse(v)
        cols = self._columns()
        acc: SVec = {}
        for j, c in v.items():
            _axpy(acc, c, cols[j])
        return acc

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            orows = other._rows
            out = []
            for r in self._rows:
                acc: SVec = {}
                for k, a in r.items():
                    _axpy(acc, a, orows[k])
                out.append(acc)
            return Matrix._wrap(self.nrows, other.ncols, out)
        v = list(other)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return dense(self.apply(sparse(v)), self.nrows)

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        out = []
        for a, b in zip(self._rows, other._rows):
            r = dict(a)
            _axpy(r, Fraction(1), b)
            out.append(r)
        return Matrix._wrap(self.nrows, self.ncols, out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        out = []
        for a, b in zip(self._rows, other._rows):
            r = dict(a)
            _axpy(r, Fraction(-1), b)
            out.append(r)
        return Matrix._wrap(self.nrows, self.ncols, out)

    def __mul__(self, s: Scalar) -> "Matrix":
        s = to_fraction(s)
        if not s:
            return Matrix.zeros(self.nrows, self.ncols)
        return Matrix._wrap(self.nrows, self.ncols, [{j: s * c for j, c in r.items()} for r in self._rows])

    __rmul__ = __mul__

    def __neg__(self) -> "Matrix":
        return self * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.to_lists())
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def is_zero(self) -> bool:
        return not any(self._rows)

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((r.get(i, 0) for i, r in enumerate(self._rows)), Fraction(0))

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def vectorize(self) -> SVec:
        """Row-major flattening: entry (i, j) goes to index ``i * ncols + j``."""
        n = self.ncols
        return {i * n + j: c for i, r in enumerate(self._rows) for j, c in r.items()}

    def is_diagonal(self) -> bool:
        return all(not r or (len(r) == 1 and i in r) for i, r in enumerate(self._rows))

    def diagonal(self) -> list:
        return [r.get(i, Fraction(0)) for i, r in enumerate(self._rows)]

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        cpos = {c: k for k, c in enumerate(cols)}
        out = []
        for i in rows:
            r = self._rows[i]
            out.append({cpos[j]: c for j, c in r.items() if j in cpos})
        return Matrix._wrap(len(rows), len(cols), out)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


class _Echelon:
    """Reduced row-echelon basis maintained under insertion.

    Every stored row has a leading 1 at its pivot and zeros in every other
    pivot column, so reducing a vector takes a single pass.
    """

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict = {}

    def reduce(self, v: Mapping[int, Fraction]) -> SVec:
        r = dict(v)
        rows = self.rows
        for p in [k for k in v if k in rows]:
            _axpy(r, -v[p], rows[p])
        return r

    def add(self, v: Mapping[int, Fraction]) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        if inv != 1:
            r = {k: c * inv for k, c in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, r)
        self.rows[p] = r
        return True

    def pivots(self) -> list:
        return sorted(self.rows)

    def sorted_rows(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_dense(m)


def rref(m) -> tuple:
    """Reduced row-echelon form and the strictly increasing pivot list.

    The returned matrix has the same shape as ``m``; zero rows go last.
    """
    m = _as_matrix(m)
    ech = _Echelon(m.ncols)
    for r in m._rows:
        if r:
            ech.add(r)
    piv = ech.pivots()
    rows = ech.sorted_rows() + [{} for _ in range(m.nrows - len(piv))]
    return Matrix._wrap(m.nrows, m.ncols, rows), piv


def rank(m) -> int:
    m = _as_matrix(m)
    ech = _Echelon(m.ncols)
    return sum(1 for r in m._rows if r and ech.add(r))


def _kernel_vectors(rows: Iterable[Mapping], ncols: int) -> list:
    ech = _Echelon(ncols)
    for r in rows:
        if r:
            ech.add(r)
    piv = set(ech.rows)
    out = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: Fraction(1)}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def kernel(m) -> "Subspace":
    """Null space ``{v : m v = 0}`` as a canonical Subspace."""
    m = _as_matrix(m)
    return Subspace.span(m.ncols, _kernel_vectors(m._rows, m.ncols))


def solve(m, rhs):
    """Solve ``m x = rhs``; free variables are set to 0.  Returns None if inconsistent."""
    m = _as_matrix(m)
    rhs = list(rhs)
    b = sparse(rhs)
    if len(rhs) != m.nrows:
        raise ValueError("rhs length must equal the row count")
    n = m.ncols
    ech = _Echelon(n + 1)
    for i, r in enumerate(m._rows):
        row = dict(r)
        if i in b:
            row[n] = b[i]
        if row:
            ech.add(row)
    if n in ech.rows:
        return None
    x = [Fraction(0)] * n
    for p, row in ech.rows.items():
        x[p] = row.get(n, Fraction(0))
    return x


class Subspace:
    """A subspace of k^n stored by its canonical RREF basis.

    Two subspaces are equal exactly when their RREF bases coincide.
    """

    __slots__ = ("ambient_dim", "_rows", "_pivots", "_bypiv")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        ech = _Echelon(ambient_dim)
        for v in vectors:
            sv = v if isinstance(v, dict) else sparse(v)
            if sv and (min(sv) < 0 or max(sv) >= ambient_dim):
                raise IndexError("vector index outside the ambient space")
            if sv:
                ech.add(sv)
        self._set(ambient_dim, ech)

    def _set(self, ambient_dim: int, ech: _Echelon) -> None:
        self.ambient_dim = ambient_dim
        self._pivots = tuple(ech.pivots())
        self._rows = tuple(ech.rows[p] for p in self._pivots)
        self._bypiv = dict(zip(self._pivots, self._rows))

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable) -> "Subspace":
        return cls(ambient_dim, vectors)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, ({i: Fraction(1)} for i in range(n)))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(n, ({i: Fraction(1)} for i in sorted(set(indices))))

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple:
        return self._pivots

    @property
    def basis(self) -> Matrix:
        return Matrix._wrap(len(self._rows), self.ambient_dim, [dict(r) for r in self._rows])

    def vectors(self) -> list:
        """Basis vectors as sparse dicts (copies)."""
        return [dict(r) for r in self._rows]

    def dense_vectors(self) -> list:
        return [dense(r, self.ambient_dim) for r in self._rows]

    def reduce(self, v) -> SVec:
        """Residual of v modulo this subspace (supported on non-pivot columns)."""
        sv = v if isinstance(v, dict) else sparse(v)
        r = dict(sv)
        for p in [k for k in sv if k in self._bypiv]:
            _axpy(r, -sv[p], self._bypiv[p])
        return r

    def contains(self, v) -> bool:
        sv = v if isinstance(v, dict) else sparse(v)
        if len(sv) and max(sv) >= self.ambient_dim:
            raise IndexError("vector longer than ambient space")
        return not self.reduce(sv)

    __contains__ = contains

    def coordinates(self, v) -> list:
        """Coordinates of v (which must lie in the subspace) in the RREF basis."""
        sv = v if isinstance(v, dict) else sparse(v)
        if self.reduce(sv):
            raise ValueError("vector is not in the subspace")
        return [sv.get(p, Fraction(0)) for p in self._pivots]

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(not other.reduce(r) for r in self._rows)

    __le__ = is_subspace_of

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self._pivots, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        ech = _Echelon(self.ambient_dim)
        for p, r in zip(self._pivots, self._rows):
            ech.rows[p] = dict(r)
        for r in other._rows:
            ech.add(r)
        out = object.__new__(Subspace)
        out._set(self.ambient_dim, ech)
        return out

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim > other.dim:
            self, other = other, self
        # a in self lies in other iff its residual mod other vanishes; the residual is linear.
        residuals = [other.reduce(r) for r in self._rows]
        rows: dict = {}
        for j, res in enumerate(residuals):
            for k, c in res.items():
                rows.setdefault(k, {})[j] = c
        alphas = _kernel_vectors(rows.values(), self.dim)
        vecs = [_combine((c, self._rows[j]) for j, c in a.items()) for a in alphas]
        return Subspace(self.ambient_dim, vecs)

    __and__ = intersect

    def complement_within(self, other: "Subspace") -> "Subspace":
        """Canonical complement of self inside other: other's RREF rows whose pivots are not pivots of self."""
        self._check(other)
        if not self.is_subspace_of(other):
            raise ValueError("complement_within requires self to be contained in other")
        mine = set(self._pivots)
        return Subspace(self.ambient_dim, [r for p, r in zip(other._pivots, other._rows) if p not in mine])

    def complement_pivots(self) -> list:
        """Coordinates not used as pivots; they index the canonical quotient basis."""
        piv = set(self._pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def image(self, m: Matrix) -> "Subspace":
        return Subspace(m.nrows, (m.apply(r) for r in self._rows))

    def is_invariant(self, m: Matrix) -> bool:
        return all(not self.reduce(m.apply(r)) for r in self._rows)

    def project_out(self, coords: Iterable[int]) -> "Subspace":
        """Intersection with the coordinate subspace spanned by ``coords``."""
        keep = set(coords)
        rows: dict = {}
        for j, r in enumerate(self._rows):
            for k, c in r.items():
                if k not in keep:
                    rows.setdefault(k, {})[j] = c
        alphas = _kernel_vectors(rows.values(), self.dim)
        return Subspace(self.ambient_dim, [_combine((c, self._rows[j]) for j, c in a.items()) for a in alphas])


def invariant_closure(ambient_dim: int, vectors: Iterable, maps: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing ``vectors`` and stable under every matrix in ``maps``."""
    ech = _Echelon(ambient_dim)
    todo = [v if isinstance(v, dict) else sparse(v) for v in vectors]
    while todo:
        v = todo.pop()
        r = ech.reduce(v)
        if not r:
            continue
        ech.add(r)
        for m in maps:
            w = m.apply(r)
            if w:
                todo.append(w)
    out = object.__new__(Subspace)
    out._set(ambient_dim, ech)
    return out
