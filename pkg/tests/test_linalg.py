import numpy as np
import pytest

from schmidt_cone.linalg import (
    flip,
    is_psd,
    kron,
    max_entangled,
    pairing,
    schmidt_spectrum,
)


def test_is_psd_identity():
    for d in (1, 3, 7):
        assert is_psd(np.eye(d))


def test_is_psd_explicit_negative_eigenvalue():
    assert not is_psd(np.diag([1.0, -1e-3]), tol=1e-9)


def test_is_psd_rejects_bad_input():
    with pytest.raises(ValueError):
        is_psd(np.ones((2, 3)))
    with pytest.raises(ValueError):
        is_psd(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        is_psd(np.eye(2), tol=-1.0)


def test_is_psd_scale_free():
    # relative tolerance: a tiny negative eigenvalue next to a huge one passes
    assert is_psd(np.diag([1e12, -1.0]), tol=1e-9)
    assert not is_psd(np.diag([1.0, -1e-6]), tol=1e-9)


def test_schmidt_spectrum_max_entangled():
    for d in range(2, 9):
        sv = schmidt_spectrum(max_entangled(d), d, d)
        assert len(sv) == d
        assert np.allclose(sv, 1 / np.sqrt(d))


def test_schmidt_spectrum_product_vector():
    v = np.zeros(6, dtype=complex)
    v[0 * 3 + 1] = 1.0  # e_0 x e_1 in C^2 x C^3
    sv = schmidt_spectrum(v, 2, 3)
    assert len(sv) == 1
    assert np.isclose(sv[0], 1.0)


def test_schmidt_spectrum_random_vector_against_reduced_density():
    # oracle: squared coefficients are the eigenvalues of the reduced density matrix
    rng = np.random.default_rng(7)
    v = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    v /= np.linalg.norm(v)
    sv = schmidt_spectrum(v, 3, 3)
    assert len(sv) == 3  # generic rank
    assert np.isclose(np.sum(sv**2), 1.0, atol=1e-10)
    M = v.reshape(3, 3)
    red = M @ M.conj().T
    eig = np.sort(np.linalg.eigvalsh(red))[::-1]
    assert np.allclose(sv**2, eig, atol=1e-10)


def test_schmidt_spectrum_zero_vector():
    assert len(schmidt_spectrum(np.zeros(4), 2, 2)) == 0


def test_schmidt_spectrum_dimension_mismatch():
    with pytest.raises(ValueError):
        schmidt_spectrum(np.zeros(5), 2, 3)


def test_pairing_identity():
    assert pairing(np.eye(4), np.eye(4)) == pytest.approx(4.0)


def test_pairing_max_entangled_with_flip():
    for d in range(2, 7):
        om = max_entangled(d)
        P = np.outer(om, om.conj())
        assert pairing(P, flip(d)) == pytest.approx(1.0, abs=1e-12)


def test_pairing_symmetric_bilinear():
    rng = np.random.default_rng(3)
    for _ in range(5):
        g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        X = (g + g.conj().T) / 2
        g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        Y = (g + g.conj().T) / 2
        g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        Z = (g + g.conj().T) / 2
        s = abs(pairing(X, Y)) + 1
        assert abs(pairing(X, Y) - pairing(Y, X)) < 1e-12 * s
        assert abs(pairing(X + 2 * Z, Y) - pairing(X, Y) - 2 * pairing(Z, Y)) < 1e-12 * s


def test_pairing_dim_mismatch():
    with pytest.raises(ValueError):
        pairing(np.eye(2), np.eye(3))


def test_flip_swaps_and_is_involution():
    F = flip(2)
    e01 = np.zeros(4)
    e01[0 * 2 + 1] = 1.0
    e10 = np.zeros(4)
    e10[1 * 2 + 0] = 1.0
    assert np.allclose(F @ e01, e10)
    for d in (2, 3, 5):
        F = flip(d)
        assert np.allclose(F, F.T)
        assert np.allclose(F @ F, np.eye(d * d))


def test_flip_eigenvalue_multiplicities():
    # symmetric/antisymmetric split: +1 with d(d+1)/2, -1 with d(d-1)/2
    for d in (2, 3, 4):
        w = np.linalg.eigvalsh(flip(d))
        assert np.sum(np.isclose(w, 1.0)) == d * (d + 1) // 2
        assert np.sum(np.isclose(w, -1.0)) == d * (d - 1) // 2


def test_max_entangled_norm():
    for d in (1, 3, 8):
        assert np.isclose(np.linalg.norm(max_entangled(d)), 1.0, atol=1e-12)
    with pytest.raises(ValueError):
        max_entangled(0)


def test_kron_index_convention():
    a = np.zeros(2)
    a[1] = 1.0
    b = np.zeros(3)
    b[2] = 1.0
    v = kron(a, b)
    assert v[1 * 3 + 2] == 1.0
    assert np.sum(np.abs(v)) == 1.0
