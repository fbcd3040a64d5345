"""Root systems from Dynkin data and the Weyl dimension formula, plus an audit of the free nilpotent module table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

__all__ = [
    "RootSystem",
    "root_system",
    "weyl_dim",
    "Table1Row",
    "TABLE1",
    "table1_check",
    "table1_audit",
]


def _gram(typ: str, n: int) -> list:
    """Inner products (a_i, a_j) of simple roots, Bourbaki numbering."""
    B = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, v):
        B[i - 1][j - 1] = B[j - 1][i - 1] = Fraction(v)

    if typ == "A":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = Fraction(2)
        for i in range(1, n):
            link(i, i + 1, -1)
    elif typ == "B":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = Fraction(2 if i < n else 1)
        for i in range(1, n):
            link(i, i + 1, -1)
    elif typ == "C":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = Fraction(1 if i < n else 2)
        for i in range(1, n - 1):
            link(i, i + 1, Fraction(-1, 2))
        link(n - 1, n, -1)
    elif typ == "D":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = Fraction(2)
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif typ == "E":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = Fraction(2)
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif typ == "F":
        for i, v in enumerate((2, 2, 1, 1), 1):
            B[i - 1][i - 1] = Fraction(v)
        link(1, 2, -1)
        link(2, 3, -1)
        link(3, 4, Fraction(-1, 2))
    elif typ == "G":
        B[0][0], B[1][1] = Fraction(2), Fraction(6)
        link(1, 2, -3)
    return B


_VALID = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


@dataclass(frozen=True)
class RootSystem:
    """Positive roots in simple-root coordinates, with the invariant form on the simple roots."""

    cartan_type: str
    rank: int
    gram: tuple
    positive_roots: tuple

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    def cartan_matrix(self) -> list:
        """``A[i][j] = <a_j, a_i^vee> = 2 (a_i, a_j) / (a_i, a_i)``."""
        g = self.gram
        return [[2 * g[i][j] / g[i][i] for j in range(self.rank)] for i in range(self.rank)]

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def fundamental_weights(self) -> list:
        """Fundamental weights in simple-root coordinates: the inverse transpose of the Cartan matrix."""
        n = self.rank
        A = self.cartan_matrix()
        out = []
        for j in range(n):
            # solve sum_k w_k <a_k, a_i^vee> = delta_ij, i.e. sum_k A[i][k] w_k = delta_ij
            aug = [list(A[i]) + [Fraction(int(i == j))] for i in range(n)]
            for c in range(n):
                p = next(r for r in range(c, n) if aug[r][c])
                aug[c], aug[p] = aug[p], aug[c]
                inv = 1 / aug[c][c]
                aug[c] = [x * inv for x in aug[c]]
                for r in range(n):
                    if r != c and aug[r][c]:
                        f = aug[r][c]
                        aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
            out.append([aug[i][n] for i in range(n)])
        return out

    def rho(self) -> list:
        """Half the sum of the positive roots, in simple-root coordinates."""
        return [Fraction(sum(r[i] for r in self.positive_roots), 2) for i in range(self.rank)]


def root_system(cartan_type: str, rank: int | None = None) -> RootSystem:
    """Build from a type letter and rank, or from a name like ``"E8"``."""
    if rank is None:
        cartan_type, rank = cartan_type[0], int(cartan_type[1:])
    typ = cartan_type.upper()
    if typ in _VALID:
        if rank < _VALID[typ]:
            raise ValueError(f"type {typ} needs rank >= {_VALID[typ]}")
    elif (typ, rank) not in _EXCEPTIONAL:
        raise ValueError(f"no root system {typ}{rank}")
    g = _gram(typ, rank)
    A = [[2 * g[i][j] / g[i][i] for j in range(rank)] for i in range(rank)]
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # length of the a_i-string below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[k] * A[i][k] for k in range(rank))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    ordered = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    return RootSystem(typ, rank, tuple(tuple(r) for r in g), ordered)


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """``prod_a <lam + rho, a^vee> / <rho, a^vee>`` with lam in fundamental-weight coordinates."""
    if len(lam) != rs.rank:
        raise ValueError(f"weight needs {rs.rank} coordinates")
    if any(int(x) != x or x < 0 for x in lam):
        raise ValueError("weight is not dominant integral")
    sq = [rs.gram[i][i] for i in range(rs.rank)]
    num = Fraction(1)
    for a in rs.positive_roots:
        top = sum(a[i] * sq[i] * (lam[i] + 1) for i in range(rs.rank))
        bot = sum(a[i] * sq[i] for i in range(rs.rank))
        num *= Fraction(top, bot)
    assert num.denominator == 1
    return int(num)


# A module column is a tuple of (multiplicity, weight); a weight is a tuple of
# (fundamental index, coefficient) pairs and () is the trivial module k.


@dataclass(frozen=True)
class Table1Row:
    label: str
    cartan_type: str
    min_rank: int
    generic: bool
    m_weight: tuple
    wedge2: tuple
    wedge3: tuple
    s: tuple


def _V(*idx_coeff) -> tuple:
    """Weight from alternating (index, coefficient) pairs; ``_V(1, 1, 2, 1)`` is l1 + l2."""
    return tuple(zip(idx_coeff[::2], idx_coeff[1::2]))


def _col(*items) -> tuple:
    """Items are weights (multiplicity 1) or ``(mult, weight)``."""
    out = []
    for it in items:
        if it and isinstance(it[0], int):
            out.append(it)
        else:
            out.append((1, it))
    return tuple(out)


TABLE1 = (
    Table1Row("A1,m=L1", "A", 1, False, _V(1, 1),
              _col(_V()), _col(), _col(_V(1, 1))),
    Table1Row("A2,m=L1", "A", 2, False, _V(1, 1),
              _col(_V(2, 1)), _col(_V()), _col(_V(1, 1, 2, 1))),
    Table1Row("A2,m=L2", "A", 2, False, _V(2, 1),
              _col(_V(1, 1)), _col(_V()), _col(_V(1, 1, 2, 1))),
    Table1Row("An,m=L1", "A", 3, True, _V(1, 1),
              _col(_V(2, 1)), _col(_V(3, 1)), _col(_V(1, 1, 2, 1))),
    Table1Row("B3,m=L1", "B", 3, False, _V(1, 1),
              _col(_V(2, 1)), _col(_V(3, 2)), _col(_V(1, 1, 2, 1), _V(1, 1))),
    Table1Row("Bn,m=L1", "B", 4, True, _V(1, 1),
              _col(_V(2, 1)), _col(_V(3, 1)), _col(_V(1, 1, 2, 1), _V(1, 1))),
    Table1Row("C2,m=L1", "C", 2, False, _V(1, 1),
              _col(_V(2, 1), _V()), _col(_V(1, 1)), _col(_V(1, 1, 2, 1), _V(1, 1))),
    Table1Row("C2,m=L2", "C", 2, False, _V(2, 1),
              _col(_V(1, 2)), _col(_V(1, 2)), _col(_V(1, 2, 2, 1), _V(2, 1))),
    Table1Row("Cn,m=L1", "C", 3, True, _V(1, 1),
              _col(_V(2, 1), _V()), _col(_V(1, 1), _V(3, 1)), _col(_V(1, 1, 2, 1), _V(1, 1))),
    Table1Row("D4,m=L1", "D", 4, False, _V(1, 1),
              _col(_V(2, 1)), _col(_V(3, 1, 4, 1)), _col(_V(1, 1, 2, 1), _V(1, 1))),
    Table1Row("Dn,m=L1", "D", 5, True, _V(1, 1),
              _col(_V(2, 1)), _col(_V(3, 1)), _col(_V(1, 1, 2, 1), _V(1, 1))),
    Table1Row("G2,m=L1", "G", 2, False, _V(1, 1),
              _col(_V(1, 1), _V(2, 1)),
              _col(_V(1, 2), _V(1, 1), _V()),
              _col(_V(1, 1, 2, 1), _V(1, 2), _V(1, 1), _V(2, 1))),
    Table1Row("G2,m=L2", "G", 2, False, _V(2, 1),
              _col(_V(1, 3), _V(2, 1)),
              _col(_V(1, 4), _V(1, 3), _V(1, 2), _V(2, 2), _V(2, 1), _V()),
              _col(_V(1, 3, 2, 1), _V(1, 2, 2, 1), _V(1, 1, 2, 1), _V(2, 2), _V(2, 1), _V(1, 3), _V(1, 2))),
    Table1Row("F4,m=L1", "F", 4, False, _V(1, 1),
              _col(_V(1, 1), _V(2, 1)),
              _col(_V(1, 2), _V(2, 1), _V(3, 2), _V(4, 2), _V()),
              _col(_V(1, 2), _V(1, 1), _V(2, 1), _V(4, 2), _V(1, 1, 2, 1), _V(1, 1, 4, 2), _V(3, 1, 4, 1))),
    Table1Row("E6,m=L1", "E", 6, False, _V(1, 1),
              _col(_V(3, 1)), _col(_V(4, 1)), _col(_V(1, 1, 3, 1), _V(1, 1, 6, 1), _V(2, 1))),
    Table1Row("E7,m=L1", "E", 7, False, _V(1, 1),
              _col(_V(1, 1), _V(3, 1)),
              _col(_V(1, 2), _V(3, 1), _V(4, 1), _V(6, 1), _V()),
              _col(_V(1, 1, 3, 1), _V(1, 1, 6, 1), _V(2, 1, 7, 1), _V(1, 2), (2, _V(1, 1)), _V(3, 1), _V(6, 1))),
    Table1Row("E8,m=L1", "E", 8, False, _V(1, 1),
              _col(_V(1, 1, 8, 1), _V(3, 1), _V(7, 1), _V(8, 1)),
              _col(_V(1, 2, 8, 1), _V(3, 1, 8, 1), _V(1, 1, 2, 1), _V(6, 1, 8, 1), (2, _V(1, 1, 7, 1)),
                   (2, _V(2, 1, 8, 1)), (2, _V(7, 1, 8, 1)), (3, _V(1, 1, 8, 1)), (2, _V(1, 1)), _V(2, 1),
                   (2, _V(3, 1)), _V(4, 1), _V(6, 1), (3, _V(7, 1)), (3, _V(8, 1)), _V(8, 1)),
              _col((2, _V(5, 1)), (2, _V(1, 1, 8, 2)), (2, _V(1, 2)), (3, _V(7, 1, 8, 1)), (3, _V(6, 1)),
                   (4, _V(2, 1)), (2, _V(8, 2)), _V(1, 1, 3, 1), _V(1, 1, 6, 1), _V(2, 1, 7, 1),
                   _V(1, 2, 8, 1), _V(3, 1, 8, 1), (2, _V(1, 1, 2, 1)), _V(6, 1, 8, 1), (3, _V(1, 1, 7, 1)),
                   (3, _V(2, 1, 8, 1)), (3, _V(3, 1)), (5, _V(1, 1, 8, 1)), (3, _V(1, 1)), (3, _V(7, 1)),
                   (2, _V(8, 1)))),
)


def _lam(rank: int, w: tuple) -> list:
    lam = [0] * rank
    for i, c in w:
        if i > rank:
            raise ValueError(f"fundamental weight l{i} does not exist in rank {rank}")
        lam[i - 1] += c
    return lam


def _column_dim(rs: RootSystem, col: tuple) -> int:
    return sum(mult * weyl_dim(rs, _lam(rs.rank, w)) for mult, w in col)


def table1_check(row: Table1Row, rank_instances: Sequence[int] | None = None) -> list:
    """Audit lines ``TYPE row COLUMN computed=<n> listed=<n> OK|MISMATCH``.

    With D the dimension of m: wedge2 must total C(D,2), wedge3 C(D,3) and
    s = (m (x) wedge2 m) / wedge3 m must total D*C(D,2) - C(D,3).
    """
    if rank_instances is None:
        rank_instances = [row.min_rank, row.min_rank + 1] if row.generic else [row.min_rank]
    lines = []
    for r in rank_instances:
        rs = root_system(row.cartan_type, r)
        D = weyl_dim(rs, _lam(r, row.m_weight))
        expect = {"wedge2": comb(D, 2), "wedge3": comb(D, 3), "s": D * comb(D, 2) - comb(D, 3)}
        for name in ("wedge2", "wedge3", "s"):
            listed = _column_dim(rs, getattr(row, name))
            computed = expect[name]
            verdict = "OK" if computed == listed else "MISMATCH"
            lines.append(f"{rs.name} {row.label} {name} computed={computed} listed={listed} {verdict}")
    return lines


def table1_audit() -> list:
    out = []
    for row in TABLE1:
        out.extend(table1_check(row))
    return out
