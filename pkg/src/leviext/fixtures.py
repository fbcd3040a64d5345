"""Named algebras used throughout the test-suite and the command line."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .io import loads_lieconst
from .lie import LieAlgebra
from .sl2 import Sl2Action, direct_sum, irreducible

__all__ = [
    "heisenberg",
    "standard_filiform",
    "abelian",
    "dl8",
    "glued_l0_h1",
    "table2",
    "table2_action",
    "TABLE2_BLOCKS",
]

# (letter, highest weight) of the four sl2-blocks, in basis order
TABLE2_BLOCKS = (("v", 10), ("w", 18), ("z", 6), ("x", 14))


def abelian(d: int) -> LieAlgebra:
    return LieAlgebra(d, {}, grade=[1] * d, name=f"k^{d}")


def heisenberg(n: int) -> LieAlgebra:
    """Basis x_1..x_n, y_1..y_n, z with [x_i, y_i] = z."""
    if n < 1:
        raise ValueError("heisenberg(n) needs n >= 1")
    labels = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)] + ["z"]
    consts = {(i, n + i, 2 * n): 1 for i in range(n)}
    return LieAlgebra(2 * n + 1, consts, labels=labels, grade=[1] * (2 * n) + [2], name=f"h{n}")


def standard_filiform(n: int) -> LieAlgebra:
    """Basis e_1..e_n with [e_1, e_i] = e_{i+1} for 2 <= i <= n-1."""
    if n < 3:
        raise ValueError("filiform algebras need dimension >= 3")
    consts = {(0, i, i + 1): 1 for i in range(1, n - 1)}
    grade = [1, 1] + list(range(2, n))
    return LieAlgebra(n, consts, labels=[f"e{i}" for i in range(1, n + 1)], grade=grade, name=f"filiform{n}")


def dl8() -> LieAlgebra:
    """The classical 8-dimensional characteristically nilpotent algebra, basis a_1..a_8."""
    a = {k: k - 1 for k in range(1, 9)}
    products = [
        (1, 2, 5, 1), (3, 4, 5, -1),
        (1, 3, 6, 1), (2, 4, 6, 1),
        (1, 4, 7, 1), (2, 6, 7, -1), (3, 5, 7, -1),
        (1, 5, 8, -1), (2, 3, 8, 1), (4, 6, 8, -1),
    ]
    return LieAlgebra.from_brackets(
        8,
        {(a[i], a[j]): {a[k]: c} for i, j, k, c in products},
        labels=[f"a{k}" for k in range(1, 9)],
        name="Dl8",
    )


def glued_l0_h1() -> LieAlgebra:
    """sl2 glued onto h_1, basis (h, e, f, x, y, z).

    Nonzero products: xy=z, hx=x, hy=-y, ey=x, fx=y, he=2e, hf=-2f, ef=h.
    """
    h, e, f, x, y, z = range(6)
    products = {
        (x, y): {z: 1},
        (h, x): {x: 1},
        (h, y): {y: -1},
        (e, y): {x: 1},
        (f, x): {y: 1},
        (h, e): {e: 2},
        (h, f): {f: -2},
        (e, f): {h: 1},
    }
    return LieAlgebra.from_brackets(6, products, labels=("h", "e", "f", "x", "y", "z"), name="L0(h1)")


@lru_cache(maxsize=None)
def _table2_text() -> str:
    return resources.files("leviext").joinpath("data", "table2.lieconst").read_text()


def table2() -> LieAlgebra:
    """The 52-dimensional algebra with basis v_0..v_10, w_0..w_18, z_0..z_6, x_0..x_14, transcribed verbatim."""
    return loads_lieconst(_table2_text())


def table2_action() -> Sl2Action:
    """Block-diagonal V(10) + V(18) + V(6) + V(14) on the standard bases of the four blocks."""
    return direct_sum(*(irreducible(n) for _, n in TABLE2_BLOCKS))
