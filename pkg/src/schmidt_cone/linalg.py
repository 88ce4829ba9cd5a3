"""Dense Hermitian linear algebra: PSD tests, Schmidt coefficients, pairings.

All operations are pure functions on numpy arrays and are safe for concurrent
use.  Matrices at desk scale (side <= 64) only, so everything goes through
dense Hermitian solvers for deterministic results.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_hermitian",
    "is_psd",
    "min_eigenvalue",
    "schmidt_spectrum",
    "pairing",
    "max_entangled",
    "flip",
    "kron",
]


def as_hermitian(X, tol: float = 1e-12) -> np.ndarray:
    """Validate that X is a square Hermitian matrix and return it as complex ndarray.

    Hermiticity is checked against an absolute tolerance of
    ``tol * max(1, frobenius_norm)``.  Raises ValueError on violation.
    """
    X = np.asarray(X, dtype=complex)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {X.shape}")
    scale = max(1.0, float(np.linalg.norm(X)))
    dev = float(np.max(np.abs(X - X.conj().T)))
    if dev > tol * scale:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
    return X


def min_eigenvalue(H) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    H = as_hermitian(H)
    return float(np.linalg.eigvalsh(H)[0])


def is_psd(H, tol: float = 1e-9) -> bool:
    """Whether a Hermitian matrix is positive semidefinite.

    True iff the minimal eigenvalue is >= -tol * max(1, spectral norm).  The
    tolerance is relative to the spectral norm so the test is scale-free;
    points on region boundaries produce zero eigenvalues up to rounding.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    H = as_hermitian(H)
    w = np.linalg.eigvalsh(H)
    scale = max(1.0, float(np.max(np.abs(w))))
    return bool(w[0] >= -tol * scale)


def schmidt_spectrum(vec, dim_a: int, dim_b: int, tol: float = 1e-12) -> np.ndarray:
    """Schmidt coefficients of a bipartite vector, nonincreasing.

    The vector of length ``dim_a * dim_b`` is reshaped row-major to a
    dim_a x dim_b matrix (index (i, j) -> i * dim_b + j, matching ``kron``)
    and its singular values above ``tol`` are returned.  The Schmidt rank is
    the length of the result; a zero vector yields an empty spectrum.
    """
    vec = np.asarray(vec, dtype=complex).reshape(-1)
    if dim_a <= 0 or dim_b <= 0:
        raise ValueError("dimensions must be positive")
    if vec.size != dim_a * dim_b:
        raise ValueError(f"vector length {vec.size} != {dim_a}*{dim_b}")
    sv = np.linalg.svd(vec.reshape(dim_a, dim_b), compute_uv=False)
    return sv[sv > tol]


def pairing(X, Y) -> float:
    """Trace inner product Tr(XY) of two Hermitian matrices (a real number)."""
    X = as_hermitian(X)
    Y = as_hermitian(Y)
    if X.shape != Y.shape:
        raise ValueError(f"dimension mismatch: {X.shape} vs {Y.shape}")
    # Tr(XY) = sum_ij X_ij Y_ji
    return float(np.sum(X * Y.T).real)


def max_entangled(d: int) -> np.ndarray:
    """The maximally entangled unit vector (1/sqrt(d)) sum_j |jj> in C^d x C^d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1.0 / np.sqrt(d)
    return v


def flip(d: int) -> np.ndarray:
    """The flip (swap) operator F = sum_ij |ij><ji| on C^d x C^d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    F = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            F[i * d + j, j * d + i] = 1.0
    return F


def kron(A, B) -> np.ndarray:
    """Kronecker product with row-major index convention (i, j) -> i * dB + j."""
    return np.kron(np.asarray(A), np.asarray(B))
