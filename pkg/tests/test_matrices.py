"""Matrix embeddings: Psi_k, the homogeneous decomposition with its norm
bound, and operator norms."""

import math
import random

import numpy as np
import pytest

from cuntzlab import (AlgebraElement, EndomorphismSpec, NotHomogeneousError,
                      Permutation, embed_degree0, homogeneous_parts,
                      norm_bounds, operator_norm, parse_element, perm_unitary,
                      psi)
from cuntzlab.sampling import random_element, random_homogeneous


def test_psi_of_one_is_identity(one):
    mat = psi(one, 1)
    for i in range(2):
        for j in range(2):
            expected = one if i == j else AlgebraElement.zero(2)
            assert mat.entries[i][j] == expected


def test_psi_of_s1(s1, s2):
    mat = psi(s1, 1)
    assert mat.entries[0][0] == s1
    assert mat.entries[0][1] == s2
    assert mat.entries[1][0].is_zero()
    assert mat.entries[1][1].is_zero()


def test_psi_star_homomorphism(rng):
    for _ in range(8):
        a = random_element(rng, max_terms=3, max_len=2)
        b = random_element(rng, max_terms=3, max_len=2)
        assert psi(a * b, 2) == psi(a, 2).matmul(psi(b, 2))
        assert psi(a.adjoint(), 2) == psi(a, 2).conjugate_transpose()


def test_embed_degree0_examples(one):
    assert np.allclose(embed_degree0(one), np.eye(1))
    u12 = perm_unitary(Permutation.parse("(1 2)"))
    mat = embed_degree0(u12)
    expected = np.zeros((4, 4))
    expected[[0, 1, 2, 3], [1, 0, 2, 3]] = 1
    assert np.allclose(mat, expected)
    e = parse_element("1/2 + 1/2 * s[1] t[2] + 1/2 * s[2] t[1]", 2)
    assert np.allclose(embed_degree0(e), np.full((2, 2), 0.5))
    with pytest.raises(NotHomogeneousError):
        embed_degree0(AlgebraElement.generator(2, 1))


def test_operator_norm_examples(s1):
    assert operator_norm(s1) == pytest.approx(1.0, abs=1e-9)
    x = parse_element("s[1] t[2] + s[2] t[1]", 2)
    assert operator_norm(x) == pytest.approx(1.0, abs=1e-9)
    two_iso = AlgebraElement.isometry(2, (1, 1)).scaled(2) * \
        AlgebraElement.generator(2, 2).adjoint()
    assert operator_norm(two_iso) == pytest.approx(2.0, abs=1e-9)
    assert operator_norm(AlgebraElement.zero(2)) == 0.0


def test_norm_bounds_mixed(s1, one):
    lo, hi = norm_bounds(s1 + one)
    assert lo == pytest.approx(1.0, abs=1e-9)
    assert hi == pytest.approx(2.0, abs=1e-9)


def test_decomposition_directions(s1):
    dec = homogeneous_parts(s1, 1)
    assert dec.direction == "creation"
    mats = dec.numeric()
    t1, t2 = mats[(1,)], mats[(2,)]
    assert np.allclose(t1, [[1, 0], [0, 0]])
    assert np.allclose(t2, [[0, 1], [0, 0]])
    dec0 = homogeneous_parts(parse_element("s[1] t[2]", 2), 1)
    assert dec0.direction == "scalar"
    assert np.allclose(dec0.numeric()[()], [[0, 1], [0, 0]])
    deca = homogeneous_parts(s1.adjoint(), 1)
    assert deca.direction == "annihilation"


def test_decomposition_requires_homogeneity(s1):
    with pytest.raises(NotHomogeneousError):
        homogeneous_parts(s1 + AlgebraElement.one(2), 2)
    # any k works for genuinely homogeneous input
    s12 = AlgebraElement.isometry(2, (1, 2))
    dec = homogeneous_parts(s12, 1)
    assert dec.direction == "creation"
    assert dec.reconstruct_psi() == psi(s12, 1)


def test_reconstruction_and_norm_bound(rng):
    k, tol = 3, 1e-9
    for _ in range(40):
        p = rng.randint(0, 3)
        l = rng.randint(0, 3)
        x = random_homogeneous(rng, 2, p, l)
        dec = homogeneous_parts(x, k)
        assert dec.reconstruct_psi() == psi(x, k)
        nx = operator_norm(x)
        for val in dec.part_norms().values():
            assert val <= nx + tol


def test_embed_multiplicative_isometric(rng):
    for _ in range(10):
        a = random_homogeneous(rng, 2, 2, 2)
        b = random_homogeneous(rng, 2, 2, 2)
        product = (a * b).level({0: 2})  # keep the embedding in M_4
        assert np.allclose(embed_degree0(a) @ embed_degree0(b),
                           embed_degree0(product))
        spectral = math.sqrt(max(np.linalg.eigvalsh(
            embed_degree0(a).conj().T @ embed_degree0(a)).max(), 0.0))
        assert operator_norm(a) == pytest.approx(spectral, abs=1e-9)
