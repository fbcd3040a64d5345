"""Localize and correct structure constants that break sl2-equivariance.

The bracket of an algebra on which sl2 acts by derivations is linear in the
structure constants, so the Leibniz residuals are affine in any chosen set
of unknown constants.  Candidate products are taken from the violations,
small sets of them are freed, and the resulting linear system must have a
unique solution that clears every violation.  Nothing is patched silently:
the result is an explicit diff.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .lie import LieAlgebra, verify_jacobi
from .linalg import _kernel_vectors, solve, Matrix
from .sl2 import Sl2Action, is_equivariant_bilinear

__all__ = ["RepairResult", "repair_equivariant", "apply_diff", "candidate_pairs"]


@dataclass
class RepairResult:
    diff: list  # (i, j, k, old, new), 0-based
    algebra: LieAlgebra
    violations_before: list
    tried: int

    def lines(self, labels=None) -> list:
        lab = labels or self.algebra.labels
        out = []
        for i, j, k, old, new in self.diff:
            out.append(f"[{lab[i]},{lab[j]}] {lab[k]}: {old} -> {new}   (c {i + 1} {j + 1} {k + 1})")
        return out


def apply_diff(L: LieAlgebra, changes: dict) -> LieAlgebra:
    """Copy of L with constants ``{(i, j, k): value}`` overwritten (zero deletes)."""
    consts = {(i, j, k): c for i, j, k, c in L.constants()}
    for key, v in changes.items():
        if v:
            consts[key] = Fraction(v)
        else:
            consts.pop(key, None)
    return LieAlgebra(L.dim, consts, labels=L.labels, grade=L.grade, name=L.name)


def candidate_pairs(A: Sl2Action, violations: list) -> list:
    """Basis pairs whose product enters some violated Leibniz equation, most frequent first."""
    count: Counter = Counter()
    for name, i, j, _ in violations:
        X = dict(A.named())[name]
        cols = X._columns()
        hits = {(i, j)}
        hits |= {(p, j) for p in cols[i]}
        hits |= {(i, p) for p in cols[j]}
        for a, b in hits:
            if a != b:
                count[(min(a, b), max(a, b))] += 1
    return sorted(count, key=lambda p: (-count[p], p))


def _residual_vector(A: Sl2Action, L: LieAlgebra) -> dict:
    """All Leibniz residuals flattened to ``{(name, i, j, k): value}``."""
    out = {}
    for name, i, j, res in is_equivariant_bilinear(A, L):
        for k, c in res.items():
            out[(name, i, j, k)] = c
    return out


def repair_equivariant(L: LieAlgebra, A: Sl2Action, max_pairs: int = 2, top: int = 8) -> RepairResult | None:
    """Smallest set of products whose corrected values make the action equivariant and keep Jacobi.

    Returns None if the algebra is already equivariant; raises ValueError if no
    unique correction exists within the search bounds.
    """
    before = is_equivariant_bilinear(A, L)
    if not before:
        return None
    cands = candidate_pairs(A, before)[:top]
    diag = A.H.diagonal() if A.H.is_diagonal() else None
    tried = 0
    for size in range(1, max_pairs + 1):
        for subset in combinations(cands, size):
            tried += 1
            unknowns = []
            for i, j in subset:
                for k in range(L.dim):
                    if diag is None or diag[k] == diag[i] + diag[j]:
                        unknowns.append((i, j, k))
            base_alg = apply_diff(L, {u: 0 for u in unknowns})
            base = _residual_vector(A, base_alg)
            cols = []
            keys = set(base)
            for u in unknowns:
                r = _residual_vector(A, apply_diff(base_alg, {u: 1}))
                col = {}
                for key in set(r) | set(base):
                    v = r.get(key, 0) - base.get(key, 0)
                    if v:
                        col[key] = v
                cols.append(col)
                keys |= set(col)
            order = sorted(keys, key=repr)
            idx = {key: n for n, key in enumerate(order)}
            M = Matrix.from_columns(len(order), [{idx[k]: v for k, v in c.items()} for c in cols])
            rhs = [-base.get(key, 0) for key in order]
            sol = solve(M, rhs)
            if sol is None:
                continue
            if _kernel_vectors(M.rows(), len(unknowns)):
                continue  # not unique
            changes = dict(zip(unknowns, sol))
            fixed = apply_diff(L, changes)
            if is_equivariant_bilinear(A, fixed) or verify_jacobi(fixed):
                continue
            old = {(i, j, k): c for i, j, k, c in L.constants()}
            diff = []
            for u, v in zip(unknowns, sol):
                o = old.get(u, Fraction(0))
                if o != v:
                    diff.append((*u, o, Fraction(v)))
            return RepairResult(diff, fixed, before, tried)
    raise ValueError(f"no unique equivariant correction found among {tried} candidate sets")
