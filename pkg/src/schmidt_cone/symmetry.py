"""Orthogonally covariant maps, invariant states, and twirling.

The two-parameter families

    map(Z)  = (1 - p - q) Tr(Z)/d I + p Z + q Z^T
    state   = (1 - a - b)/d^2 I + a |Omega><Omega| + (b/d) F

are linked by the Choi correspondence: ``CovariantMap(d, a, b).choi()`` equals
``InvariantState(d, a, b).matrix()``.  Twirling over the orthogonal group is
implemented exactly as a 3-dimensional Gram projection onto the commutant
span(I, d|Omega><Omega|, F), and approximately by Haar Monte-Carlo averaging.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_hermitian, flip, max_entangled

__all__ = [
    "CovariantMap",
    "InvariantState",
    "InvariantCoordinates",
    "commutant_basis",
    "commutant_gram",
    "twirl_exact",
    "haar_orthogonal",
    "haar_orthogonal_batch",
    "twirl_monte_carlo",
    "apply_channel_right",
]

MC_CHUNK = 1024  # fixed Monte-Carlo chunk size; part of the determinism contract


@dataclass(frozen=True)
class CovariantMap:
    """The orthogonally covariant map Z -> (1-p-q) Tr(Z)/d I + p Z + q Z^T.

    p and q may be floats or exact rationals; matrix operations coerce to
    float.  The map is Hermitian-preserving for real p, q and trace-preserving
    by construction.
    """

    d: int
    p: object
    q: object

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")

    def apply(self, Z) -> np.ndarray:
        Z = np.asarray(Z, dtype=complex)
        if Z.shape != (self.d, self.d):
            raise ValueError(f"expected a {self.d}x{self.d} matrix, got {Z.shape}")
        p, q = float(self.p), float(self.q)
        out = p * Z + q * Z.T
        out += (1.0 - p - q) * (np.trace(Z) / self.d) * np.eye(self.d)
        return out

    def choi(self) -> np.ndarray:
        """Normalized Choi matrix (1/d) sum_ij |i><j| x map(|i><j|)."""
        d = self.d
        C = np.zeros((d * d, d * d), dtype=complex)
        unit = np.zeros((d, d), dtype=complex)
        for i in range(d):
            for j in range(d):
                unit[i, j] = 1.0
                C[i * d : (i + 1) * d, j * d : (j + 1) * d] = self.apply(unit) / d
                unit[i, j] = 0.0
        return C


@dataclass(frozen=True)
class InvariantState:
    """The orthogonally invariant operator (1-a-b)/d^2 I + a |Omega><Omega| + (b/d) F."""

    d: int
    a: object
    b: object

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")

    def matrix(self) -> np.ndarray:
        d = self.d
        a, b = float(self.a), float(self.b)
        omega = max_entangled(d)
        rho = ((1.0 - a - b) / d**2) * np.eye(d * d, dtype=complex)
        rho += a * np.outer(omega, omega.conj())
        rho += (b / d) * flip(d)
        return rho


def commutant_basis(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Ordered basis (I, d|Omega><Omega|, F) of the O x O commutant."""
    omega = max_entangled(d)
    return (
        np.eye(d * d, dtype=complex),
        d * np.outer(omega, omega.conj()),
        flip(d).astype(complex),
    )


def commutant_gram(d: int) -> np.ndarray:
    """Gram matrix Tr(G_i G_j) of the commutant basis.

    Closed form fixed after brute-force trace computation at d = 2..5 (see
    tests): diagonal d^2, off-diagonal d.
    """
    G = np.full((3, 3), float(d))
    np.fill_diagonal(G, float(d * d))
    return G


@dataclass(frozen=True)
class InvariantCoordinates:
    """Coefficients of an invariant operator in the basis (I, d|Omega><Omega|, F)."""

    d: int
    c1: float
    c2: float
    c3: float

    def matrix(self) -> np.ndarray:
        g1, g2, g3 = commutant_basis(self.d)
        return self.c1 * g1 + self.c2 * g2 + self.c3 * g3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


def twirl_exact(X) -> InvariantCoordinates:
    """Orthogonal (trace inner product) projection of X onto the commutant.

    Solves the 3x3 Gram system with right-hand side Tr(G_i X); this equals the
    Haar average of (O x O) X (O x O)^T.
    """
    X = as_hermitian(X)
    d2 = X.shape[0]
    d = round(np.sqrt(d2))
    if d * d != d2 or d < 2:
        raise ValueError(f"side {d2} is not d^2 for some d >= 2")
    gram = commutant_gram(d)
    # det = (d^2-d)^2 (d^2+2d) > 0 for d >= 2
    assert np.linalg.det(gram) > 0.0
    basis = commutant_basis(d)
    rhs = np.array([np.sum(g * X.T).real for g in basis])
    c = np.linalg.solve(gram, rhs)
    return InvariantCoordinates(d, float(c[0]), float(c[1]), float(c[2]))


def haar_orthogonal_batch(d: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """n Haar-distributed real orthogonal d x d matrices, shape (n, d, d).

    QR of a standard Gaussian matrix with the R-diagonal sign correction.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    g = rng.standard_normal((n, d, d))
    q, r = np.linalg.qr(g)
    s = np.sign(np.einsum("nii->ni", r))
    s[s == 0] = 1.0
    return q * s[:, None, :]


def haar_orthogonal(d: int, rng: np.random.Generator) -> np.ndarray:
    """A single Haar-distributed real orthogonal d x d matrix."""
    return haar_orthogonal_batch(d, 1, rng)[0]


def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed).jumped(chunk_index))


def twirl_monte_carlo(X, n_samples: int, seed: int = 0) -> np.ndarray:
    """Monte-Carlo twirl (1/N) sum_i (O_i x O_i) X (O_i x O_i)^T over Haar samples.

    Deterministic given (seed, n_samples): sampling is split into fixed-size
    chunks, each driven by an independent counter-based Philox stream keyed by
    (seed, chunk index), and partial sums are accumulated in chunk order.  The
    result therefore does not depend on how chunks might be scheduled.
    """
    if n_samples <= 0:
        raise ValueError("n_samples must be positive")
    X = as_hermitian(X)
    d2 = X.shape[0]
    d = round(np.sqrt(d2))
    if d * d != d2:
        raise ValueError(f"side {d2} is not a perfect square")
    total = np.zeros_like(X)
    done = 0
    chunk_index = 0
    while done < n_samples:
        m = min(MC_CHUNK, n_samples - done)
        O = haar_orthogonal_batch(d, m, _chunk_rng(seed, chunk_index))
        K = np.einsum("nij,nkl->nikjl", O, O).reshape(m, d2, d2)
        total += np.matmul(np.matmul(K, X), K.transpose(0, 2, 1)).sum(axis=0)
        done += m
        chunk_index += 1
    return total / n_samples


def apply_channel_right(m: CovariantMap, X) -> np.ndarray:
    """(id x map)(X) for a bipartite operator X on C^d x C^d, applied blockwise."""
    X = np.asarray(X, dtype=complex)
    d = m.d
    if X.shape != (d * d, d * d):
        raise ValueError(f"expected a {d*d}x{d*d} matrix, got {X.shape}")
    out = np.zeros_like(X)
    for i in range(d):
        for j in range(d):
            blk = X[i * d : (i + 1) * d, j * d : (j + 1) * d]
            out[i * d : (i + 1) * d, j * d : (j + 1) * d] = m.apply(blk)
    return out
