import random
from math import comb

import pytest

from leviext.fixtures import heisenberg
from leviext.free import (
    MAX_DIM, delta_hom, derivation_extension, free_nilpotent, graded_dims, hall_words, kernel_ideal,
    mobius, model_isomorphism, natural_hom, witt_oracle,
)
from leviext.lie import is_derivation, nilindex, verify_jacobi
from leviext.linalg import Matrix, kernel, rank


def necklaces(d, m):
    # independent oracle: aperiodic words of length m over d letters, up to rotation
    from itertools import product

    seen, count = set(), 0
    for w in product(range(d), repeat=m):
        rots = {w[i:] + w[:i] for i in range(m)}
        if len(rots) < m:
            continue
        key = min(rots)
        if key not in seen:
            seen.add(key)
            count += 1
    return count


def test_mobius_small():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_witt_matches_necklace_count(d, m):
    assert witt_oracle(d, m) == necklaces(d, m)


def test_small_dims():
    assert free_nilpotent(2, 2).dim == 3
    assert graded_dims(free_nilpotent(2, 3)) == [2, 1, 2]
    assert free_nilpotent(3, 3).dim == 14
    assert witt_oracle(3, 3) == 8
    F = free_nilpotent(4, 1)
    assert F.dim == 4 and F.algebra.is_abelian()


def test_hall_words_degree_order():
    words = hall_words(2, 4)
    assert [w.degree for w in words] == sorted(w.degree for w in words)
    assert all(w.left > w.right for w in words if not w.is_generator)


def test_graded_and_nilindex():
    F = free_nilpotent(3, 4)
    assert F.algebra.is_graded
    assert nilindex(F.algebra) == 4
    for k, w in enumerate(F.hall_basis):
        assert F.algebra.grade[k] == w.degree


def test_size_cap():
    with pytest.raises(MemoryError):
        free_nilpotent(40, 4, max_dim=1000)
    assert MAX_DIM >= 10000


def test_natural_hom_onto_heisenberg():
    F = free_nilpotent(2, 2)
    h = heisenberg(1)
    theta = natural_hom(F, h, [[1, 0, 0], [0, 1, 0]])
    assert rank(theta) == 3 and kernel(theta).dim == 0


def test_natural_hom_kernel_is_ideal():
    F = free_nilpotent(4, 2)
    h = heisenberg(2)
    theta = natural_hom(F, h, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]])
    K = kernel_ideal(F, theta)
    assert K.dim == F.dim - 5


def test_natural_hom_rejects_deep_target():
    F = free_nilpotent(2, 2)
    from leviext.fixtures import standard_filiform
    with pytest.raises(ValueError):
        natural_hom(F, standard_filiform(4), [[1, 0, 0, 0], [0, 1, 0, 0]])


def _rand_matrix(rng, d):
    return Matrix.from_dense([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])


def test_delta_is_homomorphism_on_seeded_pairs():
    rng = random.Random(20240511)
    F = free_nilpotent(3, 3)
    for _ in range(100):
        A, B = _rand_matrix(rng, 3), _rand_matrix(rng, 3)
        dA, dB, dAB = delta_hom(F, [A, B, A @ B - B @ A])
        assert dA @ dB - dB @ dA == dAB


def test_delta_injective_and_derivation():
    F = free_nilpotent(3, 3)
    basis = [Matrix.from_entries(3, 3, {(i, j): 1}) for i in range(3) for j in range(3)]
    images = delta_hom(F, basis)
    assert all(is_derivation(F.algebra, X) for X in images)
    from leviext.linalg import Subspace
    assert Subspace(F.dim * F.dim, (X.vectorize() for X in images)).dim == 9


def test_derivation_extension_shape_check():
    F = free_nilpotent(2, 2)
    with pytest.raises(ValueError):
        derivation_extension(F, Matrix.identity(3))


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("t", [2, 3])
def test_wedge_models(m, t):
    theta = model_isomorphism(m, t)
    assert rank(theta) == theta.nrows == theta.ncols


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_dimension_formulas(d):
    assert free_nilpotent(d, 2).dim == comb(d + 1, 2)
    assert free_nilpotent(d, 3).dim == comb(d + 1, 2) + 2 * comb(d + 1, 3)


def test_jacobi_on_free():
    assert verify_jacobi(free_nilpotent(2, 5).algebra) == []
