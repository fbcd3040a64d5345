"""Free nilpotent Lie algebras on a Hall basis, their universal maps, and the wedge models in nilindex 2 and 3."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .lie import LieAlgebra, homomorphism_violations, is_derivation, is_ideal, lower_central_series
from .linalg import Matrix, Subspace, _axpy, kernel, sparse

__all__ = [
    "HallWord",
    "FreeNilpotent",
    "free_nilpotent",
    "hall_words",
    "graded_dims",
    "witt_oracle",
    "mobius",
    "natural_hom",
    "kernel_ideal",
    "derivation_extension",
    "delta_hom",
    "wedge_model_2",
    "wedge_model_3",
    "s_projection",
    "model_isomorphism",
    "MAX_DIM",
]

# refuse to build anything larger than this many basis vectors
MAX_DIM = 20000


@dataclass(frozen=True)
class HallWord:
    """A generator (``gen`` set) or a bracket ``[left, right]`` of two Hall words."""

    gen: int | None = None
    left: "HallWord | None" = None
    right: "HallWord | None" = None
    degree: int = field(init=False)
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.gen is not None:
            object.__setattr__(self, "degree", 1)
            object.__setattr__(self, "key", (1, self.gen))
        else:
            d = self.left.degree + self.right.degree
            object.__setattr__(self, "degree", d)
            object.__setattr__(self, "key", (d, self.left.key, self.right.key))

    @property
    def is_generator(self) -> bool:
        return self.gen is not None

    def __lt__(self, other: "HallWord") -> bool:
        return self.key < other.key

    def __le__(self, other: "HallWord") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "HallWord") -> bool:
        return self.key > other.key

    def __ge__(self, other: "HallWord") -> bool:
        return self.key >= other.key

    def render(self, names: Sequence[str] | None = None) -> str:
        if self.gen is not None:
            return names[self.gen] if names else f"x{self.gen + 1}"
        return f"[{self.left.render(names)},{self.right.render(names)}]"

    def __str__(self) -> str:
        return self.render()


def _is_hall_pair(u: HallWord, v: HallWord) -> bool:
    return u > v and (u.is_generator or u.right <= v)


def hall_words(d: int, t: int) -> list:
    """Hall words of degree <= t on d generators, degree ascending, then by the Hall order."""
    if d < 1 or t < 1:
        raise ValueError("need d >= 1 and t >= 1")
    by_deg = {1: [HallWord(gen=i) for i in range(d)]}
    for m in range(2, t + 1):
        words = []
        for a in range(1, m):
            for u in by_deg[m - a]:
                for v in by_deg[a]:
                    if _is_hall_pair(u, v):
                        words.append(HallWord(left=u, right=v))
        words.sort(key=lambda w: w.key)
        by_deg[m] = words
    return [w for m in range(1, t + 1) for w in by_deg[m]]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined on positive integers")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_oracle(d: int, m: int) -> int:
    """Number of degree-m basis elements of the free Lie algebra on d generators (necklace count)."""
    if m < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(k) * d ** (m // k) for k in range(1, m + 1) if m % k == 0)
    q, r = divmod(total, m)
    assert r == 0
    return q


@dataclass
class FreeNilpotent:
    d: int
    t: int
    algebra: LieAlgebra
    hall_basis: list
    degree_offsets: list

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def block(self, m: int) -> range:
        """Index range of the degree-m block."""
        return range(self.degree_offsets[m - 1], self.degree_offsets[m])

    def degree_subspace(self, m: int) -> Subspace:
        return Subspace.coordinate(self.dim, self.block(m))

    def at_least(self, m: int) -> Subspace:
        """Span of all blocks of degree >= m, which is the m-th term of the lower central series."""
        return Subspace.coordinate(self.dim, range(self.degree_offsets[min(m, self.t + 1) - 1], self.dim))

    def index_of(self, w: HallWord) -> int:
        return self._index[w.key]

    def __post_init__(self):
        self._index = {w.key: i for i, w in enumerate(self.hall_basis)}


def free_nilpotent(d: int, t: int, max_dim: int = MAX_DIM) -> FreeNilpotent:
    """``N_{d,t}``: the free Lie algebra on d generators modulo brackets of degree > t."""
    expected = sum(witt_oracle(d, m) for m in range(1, t + 1)) if d >= 1 and t >= 1 else 0
    if expected > max_dim:
        raise MemoryError(f"N_{{{d},{t}}} has dimension {expected}, above the cap {max_dim}")
    words = hall_words(d, t)
    index = {w.key: i for i, w in enumerate(words)}
    memo: dict = {}

    def rewrite(u: HallWord, v: HallWord) -> dict:
        """[u, v] expanded on the Hall basis with integer coefficients."""
        if u.degree + v.degree > t or u.key == v.key:
            return {}
        if u < v:
            return {k: -c for k, c in rewrite(v, u).items()}
        key = (u.key, v.key)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if _is_hall_pair(u, v):
            out = {index[(u.degree + v.degree, u.key, v.key)]: 1}
        else:
            # u = [s, r] with r > v:  [[s,r],v] = [[s,v],r] + [s,[r,v]]
            s, r = u.left, u.right
            out: dict = {}
            for k, c in rewrite(r, v).items():
                _axpy(out, c, rewrite(s, words[k]))
            for k, c in rewrite(s, v).items():
                _axpy(out, c, rewrite(words[k], r))
        memo[key] = out
        return out

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10000))
    try:
        consts = {}
        for i, j in combinations(range(len(words)), 2):
            if words[i].degree + words[j].degree > t:
                continue
            for k, c in rewrite(words[i], words[j]).items():
                consts[(i, j, k)] = c
    finally:
        sys.setrecursionlimit(old)
    offsets = [0]
    for m in range(1, t + 1):
        offsets.append(offsets[-1] + sum(1 for w in words if w.degree == m))
    names = [f"x{i + 1}" for i in range(d)]
    L = LieAlgebra(
        len(words),
        consts,
        labels=[w.render(names) for w in words],
        grade=[w.degree for w in words],
        name=f"N_{d},{t}",
    )
    return FreeNilpotent(d, t, L, words, offsets)


def graded_dims(F: FreeNilpotent) -> list:
    return [F.degree_offsets[m] - F.degree_offsets[m - 1] for m in range(1, F.t + 1)]


def natural_hom(F: FreeNilpotent, target: LieAlgebra, G: Sequence, check: bool = True) -> Matrix:
    """The homomorphism ``N_{d,t} -> target`` sending generator i to ``G[i]``.

    The target must be nilpotent of nilindex at most t, otherwise no such
    homomorphism exists in general.
    """
    if len(G) != F.d:
        raise ValueError(f"need exactly {F.d} generator images")
    lcs = lower_central_series(target)
    if lcs[-1].dim or len(lcs) - 1 > F.t:
        raise ValueError("target is not nilpotent of nilindex <= t")
    images: list = []
    for w in F.hall_basis:
        if w.is_generator:
            g = G[w.gen]
            images.append(dict(g) if isinstance(g, dict) else sparse(g))
        else:
            a = images[F.index_of(w.left)]
            b = images[F.index_of(w.right)]
            images.append(target._br(a, b))
    theta = Matrix.from_columns(target.dim, images)
    if check:
        pairs = [(i, j) for i, j in combinations(range(F.dim), 2)
                 if F.algebra.grade[i] + F.algebra.grade[j] <= F.t]
        bad = homomorphism_violations(F.algebra, target, theta, pairs)
        if bad:
            raise AssertionError(f"natural map fails to be a homomorphism at {bad[0][:2]}")
    return theta


def kernel_ideal(F: FreeNilpotent, theta: Matrix, check: bool = True) -> Subspace:
    K = kernel(theta)
    if check and not is_ideal(F.algebra, K, generators=range(F.d)):
        raise AssertionError("kernel of a homomorphism failed the ideal test")
    return K


def derivation_extension(F: FreeNilpotent, d0: Matrix, check: bool = False) -> Matrix:
    """Unique derivation of ``N_{d,t}`` extending a map on the generators.

    ``d0`` is either d x d (a map of the generator space) or ``dim F`` x d.
    """
    if d0.ncols != F.d or d0.nrows not in (F.d, F.dim):
        raise ValueError("d0 must have one column per generator")
    cols0 = d0._columns()
    L = F.algebra
    images: list = []
    for w in F.hall_basis:
        if w.is_generator:
            images.append(dict(cols0[w.gen]))
        else:
            i, j = F.index_of(w.left), F.index_of(w.right)
            out = L._br(images[i], {j: Fraction(1)})
            _axpy(out, Fraction(1), L._br({i: Fraction(1)}, images[j]))
            images.append(out)
    D = Matrix.from_columns(F.dim, images)
    if check and not is_derivation(L, D):
        raise AssertionError("extension is not a derivation")
    return D


def delta_hom(F: FreeNilpotent, maps: Sequence[Matrix], check: bool = False) -> list:
    """``gl(d) -> Der N_{d,t}`` applied elementwise."""
    return [derivation_extension(F, m, check=check) for m in maps]


def wedge_model_2(m: int) -> LieAlgebra:
    """``m + wedge^2 m`` with ``[x_i, x_j] = x_i ^ x_j``."""
    if m < 2:
        raise ValueError("need at least two generators")
    pairs = list(combinations(range(m), 2))
    consts = {(i, j, m + p): 1 for p, (i, j) in enumerate(pairs)}
    labels = [f"x{i + 1}" for i in range(m)] + [f"x{i + 1}^x{j + 1}" for i, j in pairs]
    return LieAlgebra(m + len(pairs), consts, labels=labels, grade=[1] * m + [2] * len(pairs), name=f"N(m{m},2)")


def _pair_vec(m: int, y: int, z: int, coeff: Fraction, pidx: dict) -> tuple:
    """Coordinates of ``coeff * (y ^ z)`` as (pair index, signed coefficient), or None."""
    if y == z:
        return None
    if y < z:
        return pidx[(y, z)], coeff
    return pidx[(z, y)], -coeff


@lru_cache(maxsize=None)
def _s_data(m: int) -> tuple:
    pairs = list(combinations(range(m), 2))
    pidx = {p: a for a, p in enumerate(pairs)}
    C = len(pairs)

    def proj(x: int, y: int, z: int) -> dict:
        # (1/3)(2 x(y^z) + y(x^z) + z(y^x)) in the coordinates a * C + pair
        out: dict = {}
        for a, (b, c), k in ((x, (y, z), Fraction(2, 3)), (y, (x, z), Fraction(1, 3)), (z, (y, x), Fraction(1, 3))):
            pv = _pair_vec(m, b, c, k, pidx)
            if pv:
                _axpy(out, Fraction(1), {a * C + pv[0]: pv[1]})
        return out

    images = {}
    for x in range(m):
        for (y, z) in pairs:
            images[(x, y, z)] = proj(x, y, z)
    S = Subspace(m * C, images.values())
    return pairs, pidx, S, images


def _s_label(m: int, col: int, pairs) -> str:
    C = len(pairs)
    a, p = divmod(col, C)
    y, z = pairs[p]
    return f"x{a + 1}(x{y + 1}^x{z + 1})"


def wedge_model_3(m: int) -> LieAlgebra:
    """``m + wedge^2 m + s`` with ``[x, y^z]`` the image of ``x (y^z)`` in the complement s of wedge^3."""
    if m < 2:
        raise ValueError("need at least two generators")
    pairs, pidx, S, images = _s_data(m)
    C = len(pairs)
    off2, off3 = m, m + C
    consts: dict = {}
    for p, (i, j) in enumerate(pairs):
        consts[(i, j, off2 + p)] = Fraction(1)
    for x in range(m):
        for p, (y, z) in enumerate(pairs):
            for r, c in enumerate(S.coordinates(images[(x, y, z)])):
                if c:
                    consts[(x, off2 + p, off3 + r)] = c
    labels = ([f"x{i + 1}" for i in range(m)] + [f"x{i + 1}^x{j + 1}" for i, j in pairs]
              + [_s_label(m, p, pairs) for p in S.pivots])
    return LieAlgebra(off3 + S.dim, consts, labels=labels, grade=[1] * m + [2] * C + [3] * S.dim,
                      name=f"N(m{m},3)")


def s_projection(m: int, x, y, z) -> list:
    """Model coordinates of the image of ``x (y ^ z)`` in s, for x, y, z in the generator space."""
    pairs, pidx, S, images = _s_data(m)
    C = len(pairs)
    xs, ys, zs = (sparse(v) for v in (x, y, z))
    acc: dict = {}
    for a, ca in xs.items():
        for b, cb in ys.items():
            for c, cc in zs.items():
                if b == c:
                    continue
                y0, z0, s = (b, c, 1) if b < c else (c, b, -1)
                _axpy(acc, ca * cb * cc * s, images[(a, y0, z0)])
    coords = S.coordinates(acc)
    return [Fraction(0)] * (m + C) + coords


def model_isomorphism(m: int, t: int) -> Matrix:
    """Checked isomorphism ``N_{m,t} -> wedge model`` sending generators to generators (t in {2, 3})."""
    if t not in (2, 3):
        raise ValueError("wedge models exist for t = 2 and t = 3")
    model = wedge_model_2(m) if t == 2 else wedge_model_3(m)
    F = free_nilpotent(m, t)
    theta = natural_hom(F, model, [{i: Fraction(1)} for i in range(m)])
    if F.dim != model.dim or kernel(theta).dim:
        raise AssertionError("natural map onto the wedge model is not bijective")
    if any(model.grade[k] != F.algebra.grade[j] for k, j, _ in theta.entries()):
        raise AssertionError("natural map does not preserve degrees")
    return theta
