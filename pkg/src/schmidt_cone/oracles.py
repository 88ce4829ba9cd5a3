"""Independent numerical verification of classifier decisions.

Every closed-form decision has an independent check here: frame-compression
PSD tests (eigenvalue based, frame by frame), the block-condition
re-derivation, frame-overlap optimization against the known minimum, extreme
witness pairing and search, Monte-Carlo twirl consistency, and small-dimension
cone-duality sanity sampling.

The protocols are embarrassingly parallel over grid points; each point draws
its own frames from a counter-derived seed, so results are independent of
scheduling and worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .classify import is_k_positive, kpos_margin_grid, schmidt_margin_grid
from .geometry import map_region_boundary, map_region_vertices, state_region_vertices
from .linalg import as_hermitian
from .symmetry import CovariantMap, InvariantState, twirl_exact, twirl_monte_carlo

__all__ = [
    "Frame",
    "OracleReport",
    "standard_frame",
    "fourier_frame",
    "pair_frame",
    "random_frames",
    "explicit_frames",
    "tomiyama_matrix",
    "tomiyama_check",
    "frame_overlap",
    "fourier_overlap_exact",
    "explicit_overlap_minimum",
    "frame_overlap_minimize",
    "block_conditions",
    "block_conditions_grid",
    "witness_pairing",
    "witness_points",
    "witness_violation_search",
    "block_positivity_falsifier",
    "duality_sanity",
    "grid_agreement",
    "witness_grid_check",
    "frame_minima_check",
    "twirl_consistency",
    "default_workers",
]


def default_workers() -> int:
    """Worker count for the verification pools, capped by SCHMIDT_CONE_THREADS."""
    n = os.cpu_count() or 1
    cap = os.environ.get("SCHMIDT_CONE_THREADS")
    if cap:
        n = max(1, min(n, int(cap)))
    return n


# ---------------------------------------------------------------------------
# Frames
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Frame:
    """Ordered orthonormal k-tuple of complex d-vectors (columns of ``vectors``)."""

    d: int
    k: int
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.shape != (self.d, self.k):
            raise ValueError(f"expected shape ({self.d}, {self.k}), got {v.shape}")
        gram = v.conj().T @ v
        if np.max(np.abs(gram - np.eye(self.k))) > 1e-10:
            raise ValueError("frame vectors are not orthonormal")
        object.__setattr__(self, "vectors", v)


def standard_frame(d: int, k: int) -> Frame:
    """The first k standard basis vectors (a real frame)."""
    return Frame(d, k, np.eye(d, k, dtype=complex))


def fourier_frame(d: int, k: int) -> Frame:
    """v_j = (1/sqrt(d)) sum_l omega^{l(j-1)} e_l with omega = exp(2 pi i / d)."""
    l = np.arange(1, d + 1)[:, None]
    j = np.arange(k)[None, :]
    return Frame(d, k, np.exp(2j * np.pi * l * j / d) / np.sqrt(d))


def pair_frame(d: int, k: int) -> Frame:
    """v_j = (e_{2j-1} + i e_{2j}) / sqrt(2); requires 2k <= d."""
    if 2 * k > d:
        raise ValueError("pair frame needs 2k <= d")
    v = np.zeros((d, k), dtype=complex)
    for j in range(k):
        v[2 * j, j] = 1 / np.sqrt(2)
        v[2 * j + 1, j] = 1j / np.sqrt(2)
    return Frame(d, k, v)


def explicit_frames(d: int, k: int) -> list[tuple[str, Frame]]:
    """The named frames used before any random search: standard, fourier, pair."""
    out = [("standard", standard_frame(d, k)), ("fourier", fourier_frame(d, k))]
    if 2 * k <= d:
        out.append(("pair", pair_frame(d, k)))
    return out


def _haar_unitary_batch(d: int, n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))
    q, r = np.linalg.qr(g)
    diag = np.einsum("nii->ni", r)
    phase = diag / np.abs(diag)
    return q * phase.conj()[:, None, :]


def random_frames(d: int, k: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """n Haar-random frames as an (n, d, k) array (first k columns of unitaries)."""
    return _haar_unitary_batch(d, n, rng)[:, :, :k]


# ---------------------------------------------------------------------------
# Frame-compression criterion
# ---------------------------------------------------------------------------


def tomiyama_matrix(m: CovariantMap, fr: Frame) -> np.ndarray:
    """The compression sum_{i,j<=k} |i><j| x map(|v_i><v_j|), a kd x kd matrix.

    The map is k-positive iff this is PSD for every orthonormal k-frame.
    """
    if fr.d != m.d:
        raise ValueError(f"dimension mismatch: frame d={fr.d}, map d={m.d}")
    k, d = fr.k, fr.d
    out = np.zeros((k * d, k * d), dtype=complex)
    for i in range(k):
        for j in range(k):
            blk = m.apply(np.outer(fr.vectors[:, i], fr.vectors[:, j].conj()))
            out[i * d : (i + 1) * d, j * d : (j + 1) * d] = blk
    return out


def _frame_operators(V: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """For stacked frames V (n, d, k): the rank-one term k|W><W| and the flip-like term.

    The compression matrix decomposes as A I + p * kP + q * Fv with
    A = (1-p-q)/d, making the (p, q) sweep cheap.
    """
    n, d, k = V.shape
    w = V.transpose(0, 2, 1).reshape(n, k * d) / np.sqrt(k)
    kP = k * (w[:, :, None] * w[:, None, :].conj())
    Fv = np.einsum("naj,nbi->niajb", V.conj(), V).reshape(n, k * d, k * d)
    return kP, Fv


def _relative_min_eig(Ms: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh(Ms)
    scale = np.maximum(1.0, np.max(np.abs(w), axis=-1))
    return w[..., 0] / scale


def _all_psd_fast(Ms: np.ndarray, tol: float) -> bool:
    """Batched PSD test via Cholesky of the tolerance-shifted matrices.

    Uses the Frobenius norm as a cheap spectral-norm upper bound for the
    relative shift, so it can only be more permissive than the eigenvalue
    test by at most that norm gap; callers keep a boundary band far wider.
    """
    scale = np.maximum(1.0, np.sqrt(np.sum(np.abs(Ms) ** 2, axis=(-2, -1)).real))
    shift = tol * scale
    eye = np.eye(Ms.shape[-1])
    try:
        np.linalg.cholesky(Ms + shift[:, None, None] * eye)
        return True
    except np.linalg.LinAlgError:
        return bool(np.all(_relative_min_eig(Ms) >= -tol))


def tomiyama_check(
    d: int,
    p: float,
    q: float,
    k: int,
    n_random: int = 200,
    seed: int = 0,
    tol: float = 1e-9,
) -> "OracleReport":
    """PSD check of the frame compression over explicit plus random frames.

    Returns the first violating frame as witness; ``worst_margin`` is the
    smallest relative minimal eigenvalue seen.
    """
    m = CovariantMap(d, p, q)
    worst = np.inf
    tried = 0
    for name, fr in explicit_frames(d, k):
        tried += 1
        margin = _relative_min_eig(tomiyama_matrix(m, fr)[None, :, :])[0]
        worst = min(worst, margin)
        if margin < -tol:
            return OracleReport(
                "violated",
                witness={"frame": name, "min_eig": float(margin)},
                samples=tried,
                worst_margin=float(worst),
            )
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(d, k)))
    if n_random > 0:
        V = random_frames(d, k, n_random, rng)
        kP, Fv = _frame_operators(V)
        A = (1.0 - p - q) / d
        Ms = A * np.eye(k * d) + p * kP + q * Fv
        margins = _relative_min_eig(Ms)
        tried += n_random
        worst = min(worst, float(np.min(margins)))
        bad = np.nonzero(margins < -tol)[0]
        if bad.size:
            i = int(bad[0])
            return OracleReport(
                "violated",
                witness={"frame": "random", "index": i, "min_eig": float(margins[i])},
                samples=tried,
                worst_margin=float(worst),
            )
    return OracleReport("consistent", witness=None, samples=tried, worst_margin=float(worst))


# ---------------------------------------------------------------------------
# Frame overlap and its minimization
# ---------------------------------------------------------------------------


def frame_overlap(fr: Frame) -> float:
    """sum_{j,j'} |<v_j | conj(v_j')>|^2, the conjugate-overlap functional."""
    t = fr.vectors.T @ fr.vectors
    return float(np.sum(np.abs(t) ** 2))


def fourier_overlap_exact(d: int, k: int) -> int:
    """Exact overlap of the fourier frame: #{(j, j') in [1,k]^2 : d | j+j'-2}."""
    return sum(
        1 for j in range(1, k + 1) for jp in range(1, k + 1) if (j + jp - 2) % d == 0
    )


def explicit_overlap_minimum(d: int, k: int) -> int:
    """Best exact overlap among the explicit frames (attains max(2k-d, 0))."""
    vals = [k, fourier_overlap_exact(d, k)]  # standard, fourier
    if 2 * k <= d:
        vals.append(0)  # pair frame overlaps vanish identically
    return min(vals)


def _overlap_gradient(V: np.ndarray) -> np.ndarray:
    # f(V) = ||V^T V||_F^2; euclidean gradient is 4 conj(V) (V^T V)
    return 4.0 * V.conj() @ (V.T @ V)


def _reorthonormalize(V: np.ndarray) -> np.ndarray:
    q, _ = np.linalg.qr(V)
    return q


def frame_overlap_minimize(
    d: int,
    k: int,
    restarts: int = 50,
    iters: int = 150,
    seed: int = 0,
) -> tuple[float, Frame]:
    """Minimum of the overlap functional over orthonormal k-frames.

    Takes the best of the explicit frames and of projected-gradient descents
    (re-orthonormalization after each step) from random starts.  The result
    is always <= the explicit-frame value and cannot drop below the known
    floor max(2k - d, 0) up to rounding.
    """
    best_val, best_frame = None, None
    for _, fr in explicit_frames(d, k):
        val = frame_overlap(fr)
        if best_val is None or val < best_val:
            best_val, best_frame = val, fr
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(d, k)))
    for _ in range(restarts):
        V = _reorthonormalize(
            rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
        )
        step = 0.05
        val = float(np.sum(np.abs(V.T @ V) ** 2))
        for _ in range(iters):
            cand = _reorthonormalize(V - step * _overlap_gradient(V))
            cand_val = float(np.sum(np.abs(cand.T @ cand) ** 2))
            if cand_val < val:
                V, val = cand, cand_val
                step *= 1.2
            else:
                step *= 0.5
                if step < 1e-12:
                    break
        if val < best_val:
            best_val, best_frame = val, Frame(d, k, _reorthonormalize(V))
    return best_val, best_frame


# ---------------------------------------------------------------------------
# Block conditions from the PSD decomposition of the compression matrix
# ---------------------------------------------------------------------------


def block_conditions(d: int, p, q, k: int, xi1sq) -> bool:
    """The six PSD conditions of the compression block decomposition.

    With A = (1-p-q)/d, requires A-q >= 0, A+q >= 0, A >= 0,
    A+q+pk*s >= 0, A+pk-pk*s >= 0 and (A+q)(A+pk) - pkq*s >= 0 at the overlap
    value s = xi1sq.  k-positivity (1 < k < d) is equivalent to these holding
    at s in {1, max(2k-d, 0)/k}.
    """
    if not 0 <= xi1sq <= 1:
        raise ValueError("xi1sq must lie in [0, 1]")
    exact = all(isinstance(v, (int, Fraction)) for v in (p, q, xi1sq))
    A = Fraction(1 - p - q, d) if exact else (1 - p - q) / d
    pk = p * k
    checks = (
        A - q,
        A + q,
        A,
        A + q + pk * xi1sq,
        A + pk - pk * xi1sq,
        (A + q) * (A + pk) - pk * q * xi1sq,
    )
    return all(c >= 0 for c in checks)


def block_conditions_grid(d: int, P, Q, k: int, xi1sq: float) -> np.ndarray:
    """Vectorized block_conditions over float arrays (strict >= 0)."""
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    A = (1.0 - P - Q) / d
    pk = P * k
    out = (A - Q >= 0) & (A + Q >= 0) & (A >= 0)
    out &= A + Q + pk * xi1sq >= 0
    out &= A + pk - pk * xi1sq >= 0
    out &= (A + Q) * (A + pk) - pk * Q * xi1sq >= 0
    return out


# ---------------------------------------------------------------------------
# Witness pairing and search
# ---------------------------------------------------------------------------


def witness_pairing(s: InvariantState, m: CovariantMap):
    """Closed-form witness value (p q) [[d+1, 1], [1, d+1]] (a b)^T + 1/(d-1).

    Its sign matches the sign of <Omega|(id x map)(state)|Omega>; the trace
    pairing equals (d-1)/d^2 times this value (measured, see tests).
    """
    if s.d != m.d:
        raise ValueError(f"dimension mismatch: state d={s.d}, map d={m.d}")
    d = s.d
    val = (d + 1) * (m.p * s.a + m.q * s.b) + m.p * s.b + m.q * s.a
    if all(isinstance(v, (int, Fraction)) for v in (s.a, s.b, m.p, m.q)):
        return val + Fraction(1, d - 1)
    return val + 1.0 / (d - 1)


def witness_points(d: int, k: int, arc_samples: int = 256) -> list[tuple[float, float]]:
    """Extreme points of the k-positivity region: vertices plus arc samples."""
    pts = list(map_region_vertices(d, k, exact=False))
    rb = map_region_boundary(d, k, arc_samples=max(2, arc_samples))
    for arc in rb.arcs:
        pts.extend(arc.samples[1:-1])
    return pts


def witness_violation_search(
    s: InvariantState,
    k: int,
    arc_samples: int = 256,
    threshold: float = -1e-12,
) -> tuple[float, float, float] | None:
    """Most negative extreme-witness pairing below threshold, or None.

    A returned (p, q, value) certifies Schmidt number > k; absence of a
    violation is evidence of membership at the sampled resolution.
    """
    pts = np.asarray(witness_points(s.d, k, arc_samples), dtype=float)
    d = s.d
    a, b = float(s.a), float(s.b)
    c1 = (d + 1) * pts[:, 0] + pts[:, 1]
    c2 = (d + 1) * pts[:, 1] + pts[:, 0]
    vals = a * c1 + b * c2 + 1.0 / (d - 1)
    i = int(np.argmin(vals))
    if vals[i] < threshold:
        return (float(pts[i, 0]), float(pts[i, 1]), float(vals[i]))
    return None


# ---------------------------------------------------------------------------
# Heuristic block-positivity falsifier
# ---------------------------------------------------------------------------


def _min_generalized_eig(M: np.ndarray, G: np.ndarray) -> tuple[float, np.ndarray]:
    w, U = np.linalg.eigh(G)
    keep = w > 1e-12 * max(float(w[-1]), 1e-300)
    W = U[:, keep] / np.sqrt(w[keep])
    M2 = W.conj().T @ M @ W
    M2 = (M2 + M2.conj().T) / 2
    vals, vecs = np.linalg.eigh(M2)
    return float(vals[0]), W @ vecs[:, 0]


def block_positivity_falsifier(
    X,
    k: int,
    iters: int = 200,
    seed: int = 0,
    tol: float = 1e-10,
) -> np.ndarray | None:
    """Search for a Schmidt-rank-<=k unit vector xi with <xi|X|xi> < 0.

    Alternating minimization: with one factor set fixed, the optimal other
    factor set solves a generalized Hermitian eigenproblem.  Heuristic: only
    a returned violator is load-bearing; None proves nothing.
    """
    X = as_hermitian(X)
    dim = X.shape[0]
    d = round(np.sqrt(dim))
    if d * d != dim:
        raise ValueError(f"side {dim} is not a perfect square")
    scale = max(1.0, float(np.linalg.norm(X, 2)))
    X4 = np.asarray(X).reshape(d, d, d, d)
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(97,)))
    A = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    B = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    val = np.inf
    eye_d = np.eye(d)
    for _ in range(iters):
        M = np.einsum("abce,bi,ej->iajc", X4, B.conj(), B).reshape(k * d, k * d)
        M = (M + M.conj().T) / 2
        G = np.kron(B.conj().T @ B, eye_d)
        val, vec = _min_generalized_eig(M, G)
        A = vec.reshape(k, d).T
        M = np.einsum("abce,ai,cj->ibje", X4, A.conj(), A).reshape(k * d, k * d)
        M = (M + M.conj().T) / 2
        G = np.kron(A.conj().T @ A, eye_d)
        val, vec = _min_generalized_eig(M, G)
        B = vec.reshape(k, d).T
        if val < -tol * scale:
            break
    if val >= -tol * scale:
        return None
    xi = np.einsum("ai,bi->ab", A, B).reshape(d * d)
    return xi / np.linalg.norm(xi)


# ---------------------------------------------------------------------------
# Reports and suite drivers
# ---------------------------------------------------------------------------


@dataclass
class OracleReport:
    """Outcome of a verification run; a violated verdict carries a witness."""

    verdict: str  # "consistent" | "violated"
    witness: object = None
    samples: int = 0
    worst_margin: float = float("inf")
    details: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness,
            "samples": self.samples,
            "worst_margin": self.worst_margin,
            "details": self.details,
        }


def duality_sanity(d: int, samples: int = 1000, seed: int = 0) -> OracleReport:
    """Dual-cone pairing sanity at desk scale (d <= 4).

    Random entanglement-breaking Choi matrices (convex mixtures of product
    projectors) paired against classifier-certified positive maps, and random
    CP Choi matrices against classifier-certified CP maps, must pair >= 0.
    """
    if d > 4:
        raise ValueError("duality sanity is desk-scale only (d <= 4)")
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(11, d)))
    worst = np.inf
    lo = -1.0 / (d - 1) - 0.3
    half = samples // 2

    def _sample_region(k: int) -> tuple[float, float]:
        while True:
            p = rng.uniform(lo, 1.3)
            q = rng.uniform(lo, 1.3)
            if is_k_positive(d, p, q, k).member:
                return p, q

    witness = None
    for _ in range(half):
        n_mix = 4
        w = rng.dirichlet(np.ones(n_mix))
        X = np.zeros((d * d, d * d), dtype=complex)
        for t in range(n_mix):
            u = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            uv = np.kron(u / np.linalg.norm(u), v / np.linalg.norm(v))
            X += w[t] * np.outer(uv, uv.conj())
        p, q = _sample_region(1)
        val = float(np.sum(X * InvariantState(d, p, q).matrix().T).real)
        if val < worst:
            worst, witness = val, {"pair": "EB-vs-positive", "p": p, "q": q, "value": val}
    for _ in range(samples - half):
        g = rng.standard_normal((d * d, d * d)) + 1j * rng.standard_normal((d * d, d * d))
        W = g @ g.conj().T
        W /= np.trace(W).real
        p, q = _sample_region(d)
        val = float(np.sum(W * InvariantState(d, p, q).matrix().T).real)
        if val < worst:
            worst, witness = val, {"pair": "CP-vs-CP", "p": p, "q": q, "value": val}
    violated = worst < -1e-10
    return OracleReport(
        "violated" if violated else "consistent",
        witness=witness if violated else None,
        samples=samples,
        worst_margin=float(worst),
    )


# --- classifier <-> frame-compression grid agreement -----------------------


def _grid_axes(grid_n: int, box: tuple[float, float]) -> np.ndarray:
    return np.linspace(box[0], box[1], grid_n)


def _grid_task(args) -> dict:
    (d, k, grid_n, box, rows, n_random, seed, band, tol) = args
    axis = _grid_axes(grid_n, box)
    P, Q = np.meshgrid(axis, axis, indexing="ij")
    margins = kpos_margin_grid(d, k, P, Q)
    names_ops = []
    for name, fr in explicit_frames(d, k):
        kP, Fv = _frame_operators(fr.vectors[None, :, :])
        names_ops.append((name, kP[0], Fv[0]))
    eye_kd = np.eye(k * d)
    disagreements = []
    random_only = 0
    checked = 0
    worst_inside = np.inf
    for ix in rows:
        for iy in range(grid_n):
            margin = margins[ix, iy]
            if abs(margin) <= band:
                continue
            checked += 1
            p, q = float(P[ix, iy]), float(Q[ix, iy])
            A = (1.0 - p - q) / d
            expl = np.stack([A * eye_kd + p * kP + q * Fv for _, kP, Fv in names_ops])
            expl_margins = _relative_min_eig(expl)
            expl_violated = bool(np.any(expl_margins < -tol))
            if margin < 0 and expl_violated:
                continue  # exterior certified by an explicit frame
            rng = np.random.default_rng(
                np.random.SeedSequence(entropy=seed, spawn_key=(d, k, ix, iy))
            )
            V = random_frames(d, k, n_random, rng)
            rkP, rFv = _frame_operators(V)
            Ms = A * eye_kd + p * rkP + q * rFv
            if margin > 0:
                worst_inside = min(worst_inside, float(np.min(expl_margins)))
                ok = not expl_violated and _all_psd_fast(Ms, tol)
                if not ok:
                    disagreements.append(
                        {"p": p, "q": q, "k": k, "classifier": "inside", "oracle": "violated"}
                    )
            else:
                rnd_margins = _relative_min_eig(Ms)
                if np.any(rnd_margins < -tol):
                    random_only += 1  # a finding: violation missed by explicit frames
                else:
                    disagreements.append(
                        {"p": p, "q": q, "k": k, "classifier": "outside", "oracle": "consistent"}
                    )
    return {
        "checked": checked,
        "disagreements": disagreements,
        "random_only": random_only,
        "worst_inside": worst_inside,
    }


def grid_agreement(
    d: int,
    grid_n: int = 200,
    n_random: int = 200,
    seed: int = 0,
    band: float = 1e-6,
    box: tuple[float, float] = (-0.6, 1.1),
    tol: float = 1e-9,
    workers: int | None = None,
    ks: tuple[int, ...] | None = None,
) -> OracleReport:
    """Classifier vs frame-compression agreement on a (p, q) grid, all k.

    Protocol per non-band point: the explicit frames are tested first; an
    exterior point certified violated by them is done.  Otherwise n_random
    fresh Haar frames (seeded per point) are tested.  A disagreement is an
    interior point with any violating frame, or an exterior point with none.
    Exterior violations found only by random frames are counted as findings,
    not disagreements.
    """
    if workers is None:
        workers = default_workers()
    ks = tuple(range(1, d + 1)) if ks is None else ks
    chunk = 10
    tasks = []
    for k in ks:
        for start in range(0, grid_n, chunk):
            rows = range(start, min(start + chunk, grid_n))
            tasks.append((d, k, grid_n, box, rows, n_random, seed, band, tol))
    results = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_grid_task, tasks))
    else:
        results = [_grid_task(t) for t in tasks]
    disagreements = [x for r in results for x in r["disagreements"]]
    checked = sum(r["checked"] for r in results)
    random_only = sum(r["random_only"] for r in results)
    worst = min((r["worst_inside"] for r in results), default=np.inf)
    verdict = "consistent" if not disagreements else "violated"
    return OracleReport(
        verdict,
        witness=disagreements[:5] or None,
        samples=checked,
        worst_margin=float(worst),
        details={
            "d": d,
            "grid": grid_n,
            "frames_per_point": n_random,
            "disagreements": len(disagreements),
            "random_only_violations": random_only,
        },
    )


# --- Schmidt classifier <-> witness-search agreement ------------------------


def witness_grid_check(
    d: int,
    grid_n: int = 100,
    arc_samples: int = 256,
    band: float = 1e-6,
) -> OracleReport:
    """Witness search finds a violation iff the classifier says SN > k.

    Runs over a grid inside the PSD triangle, all k, excluding a band around
    each region boundary.
    """
    verts = np.asarray(state_region_vertices(d, d, exact=False))
    a_axis = np.linspace(verts[:, 0].min(), verts[:, 0].max(), grid_n)
    b_axis = np.linspace(verts[:, 1].min(), verts[:, 1].max(), grid_n)
    A, B = np.meshgrid(a_axis, b_axis, indexing="ij")
    m_state = schmidt_margin_grid(d, d, A, B)
    mismatches = []
    checked = 0
    for k in range(1, d + 1):
        mk = schmidt_margin_grid(d, k, A, B)
        sel = (m_state > band) & (np.abs(mk) > band)
        pts_a, pts_b, expect = A[sel], B[sel], (mk[sel] < 0)
        wpts = np.asarray(witness_points(d, k, arc_samples), dtype=float)
        c1 = (d + 1) * wpts[:, 0] + wpts[:, 1]
        c2 = (d + 1) * wpts[:, 1] + wpts[:, 0]
        vals = np.outer(pts_a, c1) + np.outer(pts_b, c2) + 1.0 / (d - 1)
        found = (vals < -1e-12).any(axis=1)
        checked += int(sel.sum())
        bad = np.nonzero(found != expect)[0]
        for i in bad[:5]:
            mismatches.append(
                {"a": float(pts_a[i]), "b": float(pts_b[i]), "k": k, "expected_violation": bool(expect[i])}
            )
        if bad.size > 5:
            mismatches.append({"k": k, "more": int(bad.size - 5)})
    verdict = "consistent" if not mismatches else "violated"
    return OracleReport(verdict, witness=mismatches or None, samples=checked, worst_margin=0.0,
                        details={"d": d, "grid": grid_n, "arc_samples": arc_samples})


# --- Frame overlap minima ----------------------------------------------------


def frame_minima_check(d: int, restarts: int = 50, iters: int = 150, seed: int = 0) -> OracleReport:
    """Explicit frames attain max(2k-d, 0); optimization never beats the floor."""
    failures = []
    minima = {}
    for k in range(1, d + 1):
        target = max(2 * k - d, 0)
        if explicit_overlap_minimum(d, k) != target:
            failures.append({"k": k, "explicit": explicit_overlap_minimum(d, k), "target": target})
        val, _ = frame_overlap_minimize(d, k, restarts=restarts, iters=iters, seed=seed)
        minima[k] = val
        if val < target - 1e-9 or val > target + 1e-6:
            failures.append({"k": k, "optimized": val, "target": target})
    verdict = "consistent" if not failures else "violated"
    return OracleReport(verdict, witness=failures or None, samples=d,
                        worst_margin=0.0, details={"d": d, "minima": minima})


# --- Twirl consistency -------------------------------------------------------


def twirl_consistency(
    d: int,
    n_ops: int = 20,
    n_samples: int = 100_000,
    seed: int = 0,
    tol: float = 1e-2,
) -> OracleReport:
    """Monte-Carlo twirl vs exact projection on random unit-norm Hermitian inputs."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(7, d)))
    worst = 0.0
    worst_op = None
    for i in range(n_ops):
        g = rng.standard_normal((d * d, d * d)) + 1j * rng.standard_normal((d * d, d * d))
        X = (g + g.conj().T) / 2
        X /= np.linalg.norm(X)
        exact = twirl_exact(X).matrix()
        mc = twirl_monte_carlo(X, n_samples, seed=seed * 1000 + i)
        err = float(np.linalg.norm(mc - exact))
        if err > worst:
            worst, worst_op = err, i
    violated = worst > tol
    return OracleReport(
        "violated" if violated else "consistent",
        witness={"operator_index": worst_op, "frobenius_error": worst} if violated else None,
        samples=n_ops,
        worst_margin=float(worst),
        details={"d": d, "n_samples": n_samples, "max_frobenius_error": worst},
    )
