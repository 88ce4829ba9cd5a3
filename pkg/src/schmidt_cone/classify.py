"""Exact membership decisions for the covariant-map and invariant-state families.

Decides the maximal k-positivity index of the map family and the Schmidt
number of the state family from the closed-form inequality systems, in two
evaluation modes:

* exact: int/Fraction inputs make every decision exact (boundary = exact
  equality, tolerance ignored);
* float: each constraint slack is compared against a boundary tolerance
  (default 1e-9).

Margins are signed slack surrogates: the minimum slack across the active
constraint system, positive inside.  For the union-shaped region (filled
ellipse OR the five-line system) the margin is the max of the two parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import dual_conic, kpos_conic, region_case

__all__ = [
    "MembershipVerdict",
    "KPositivityProfile",
    "StateClassification",
    "SuperpositivityProfile",
    "is_k_positive",
    "k_positivity_max",
    "schmidt_membership",
    "schmidt_number",
    "k_block_positivity_max",
    "k_superpositivity_max",
    "kpos_margin_grid",
    "schmidt_margin_grid",
]

BOUNDARY_TOL = 1e-9


def _is_exact(*vals) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in vals)


def _check_finite(*vals):
    for v in vals:
        if isinstance(v, float) and not math.isfinite(v):
            raise ValueError(f"non-finite input {v!r}")


@dataclass(frozen=True)
class MembershipVerdict:
    """Result of a single region-membership test.

    status is 'inside' | 'boundary' | 'outside'; margin is the minimum
    constraint slack (exact Fraction in exact mode).
    """

    status: str
    margin: object

    @property
    def member(self) -> bool:
        return self.status != "outside"


def _verdict(margin, exact: bool, tol: float) -> MembershipVerdict:
    if exact:
        if margin > 0:
            return MembershipVerdict("inside", margin)
        if margin < 0:
            return MembershipVerdict("outside", margin)
        return MembershipVerdict("boundary", margin)
    m = float(margin)
    if m > tol:
        return MembershipVerdict("inside", m)
    if m < -tol:
        return MembershipVerdict("outside", m)
    return MembershipVerdict("boundary", m)


# ---------------------------------------------------------------------------
# k-positivity of the map family
# ---------------------------------------------------------------------------


def _kpos_slacks(d: int, p, q, k: int) -> list:
    case = region_case(d, k)
    if case == 1:
        return [
            1 - p + (d - 1) * q,
            1 - q + (d - 1) * p,
            1 - p - q,
            (d - 1) * (p + q) + 1,
        ]
    if case == 4:
        return [
            1 - p + (d - 1) * q,
            1 - p - (d + 1) * q,
            (d - 1) * ((d + 1) * p + q) + 1,
        ]
    slacks = [
        1 - p + (d - 1) * q,
        1 - p - (d + 1) * q,
        (k * d - 1) * p + (d - 1) * q + 1,
    ]
    if case == 2:
        slacks.append(1 - q + (k * d - 1) * p)
    else:
        conic = kpos_conic(d, k, exact=_is_exact(p, q))
        slacks.append(-conic(p, q))
    return slacks


def is_k_positive(d: int, p, q, k: int, tol: float = BOUNDARY_TOL) -> MembershipVerdict:
    """Membership of (p, q) in the k-positivity region.

    Case k=1 uses the four-line trapezoid with the second constraint read as
    q - (d-1)p <= 1 (the p <-> q transpose symmetry of the family); this
    reading is cross-checked by the frame-compression oracle suite.
    """
    _check_finite(p, q)
    slacks = _kpos_slacks(d, p, q, k)
    return _verdict(min(slacks), _is_exact(p, q), tol)


@dataclass(frozen=True)
class KPositivityProfile:
    d: int
    p: object
    q: object
    max_k: int  # 0 means not even positive
    per_k: tuple


def k_positivity_max(d: int, p, q, tol: float = BOUNDARY_TOL) -> KPositivityProfile:
    """Largest k for which the map is k-positive (boundary counts as member)."""
    per_k = tuple(is_k_positive(d, p, q, k, tol) for k in range(1, d + 1))
    max_k = 0
    for k, v in enumerate(per_k, start=1):
        if v.member:
            max_k = k
    return KPositivityProfile(d, p, q, max_k, per_k)


# ---------------------------------------------------------------------------
# Schmidt number of the state family
# ---------------------------------------------------------------------------


def _schmidt_linear_slacks(d: int, a, b, k: int) -> list:
    case = region_case(d, k)
    if case == 1:
        return [
            (d - 1) * ((d + 1) * a + b) + 1,
            1 - (d + 1) * a - b,
            (d - 1) * (a + (d + 1) * b) + 1,
            1 - a - (d + 1) * b,
        ]
    if case == 2:
        return [
            (d - 1) * ((d + 1) * a + b) + 1,
            (k * d - 1) - (d - 1) * ((d + 1) * a + b),
            1 - a - (d + 1) * b,
            (d - 1) * ((k * d + k - 1) * b - (d - k + 1) * a) + (k * d + k - 1),
        ]
    if case == 3:
        # fifth line: chord through the two arc endpoints; constant
        # (d^2 + kd + k - 3)/(d - 1), cleared of denominators
        return [
            (d - 1) * ((d + 1) * a + b) + 1,
            (k * d - 1) - (d - 1) * ((d + 1) * a + b),
            1 - a - (d + 1) * b,
            1 - a + (d - 1) * b,
            (d * d + k * d + k - 3) - (d - 1) * ((3 * d - k + 3) * a - (k * d + k - 3) * b),
        ]
    return [
        1 - a + (d - 1) * b,
        1 - a - (d + 1) * b,
        (d - 1) * ((d + 1) * a + b) + 1,
    ]


def schmidt_membership(d: int, a, b, k: int, tol: float = BOUNDARY_TOL) -> MembershipVerdict:
    """Membership of (a, b) in the Schmidt-number-<=k region.

    For d/2 < k < d the region is the filled dual ellipse united with the
    five-line system, so the margin is the max of the two sub-margins.
    """
    _check_finite(a, b)
    exact = _is_exact(a, b)
    linear = min(_schmidt_linear_slacks(d, a, b, k))
    if region_case(d, k) != 3:
        return _verdict(linear, exact, tol)
    conic = dual_conic(d, k, exact=exact)
    margin = max(linear, -conic(a, b))
    return _verdict(margin, exact, tol)


@dataclass(frozen=True)
class StateClassification:
    d: int
    a: object
    b: object
    schmidt_number: int | None  # None means not a state (outside the PSD triangle)
    per_k: tuple

    @property
    def is_state(self) -> bool:
        return self.schmidt_number is not None

    @property
    def boundary(self) -> bool:
        return self.is_state and self.per_k[self.schmidt_number - 1].status == "boundary"


def schmidt_number(d: int, a, b, tol: float = BOUNDARY_TOL) -> StateClassification:
    """Smallest k with (a, b) in the Schmidt-<=k region; None if not a state.

    State-ness is decided by membership in the k=d region (the PSD triangle),
    which is exact, rather than by an eigenvalue computation.
    """
    per_k = tuple(schmidt_membership(d, a, b, k, tol) for k in range(1, d + 1))
    if not per_k[-1].member:
        return StateClassification(d, a, b, None, per_k)
    sn = next(k for k, v in enumerate(per_k, start=1) if v.member)
    return StateClassification(d, a, b, sn, per_k)


# ---------------------------------------------------------------------------
# Choi-dual wrappers
# ---------------------------------------------------------------------------


def k_block_positivity_max(d: int, a, b, tol: float = BOUNDARY_TOL) -> KPositivityProfile:
    """Largest k for which the invariant operator is k-block positive.

    Via the Choi correspondence this is k-positivity membership of (a, b).
    """
    return k_positivity_max(d, a, b, tol)


@dataclass(frozen=True)
class SuperpositivityProfile:
    d: int
    p: object
    q: object
    max_k: int  # d when the Choi matrix is PSD at all, else 0
    min_k: int | None  # smallest k with k-superpositivity (the Schmidt number)
    per_k: tuple


def k_superpositivity_max(d: int, p, q, tol: float = BOUNDARY_TOL) -> SuperpositivityProfile:
    """Superpositivity profile of the map: membership is upward closed in k.

    max_k is the largest k with membership (d whenever the map is completely
    positive at all); the companion min_k is the smallest such k, i.e. the
    Schmidt number of the Choi matrix.
    """
    cls = schmidt_number(d, p, q, tol)
    max_k = d if cls.is_state else 0
    return SuperpositivityProfile(d, p, q, max_k, cls.schmidt_number, cls.per_k)


# ---------------------------------------------------------------------------
# Vectorized float-grid margins (shared by oracle protocols and plots)
# ---------------------------------------------------------------------------


def kpos_margin_grid(d: int, k: int, P, Q) -> np.ndarray:
    """Elementwise k-positivity margin over float arrays P, Q."""
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    case = region_case(d, k)
    if case == 1:
        slacks = [
            1 - P + (d - 1) * Q,
            1 - Q + (d - 1) * P,
            1 - P - Q,
            (d - 1) * (P + Q) + 1,
        ]
    elif case == 4:
        slacks = [
            1 - P + (d - 1) * Q,
            1 - P - (d + 1) * Q,
            (d - 1) * ((d + 1) * P + Q) + 1,
        ]
    else:
        slacks = [
            1 - P + (d - 1) * Q,
            1 - P - (d + 1) * Q,
            (k * d - 1) * P + (d - 1) * Q + 1,
        ]
        if case == 2:
            slacks.append(1 - Q + (k * d - 1) * P)
        else:
            conic = kpos_conic(d, k)
            slacks.append(-conic(P, Q))
    return np.minimum.reduce(slacks)


def schmidt_margin_grid(d: int, k: int, A, B) -> np.ndarray:
    """Elementwise Schmidt-<=k membership margin over float arrays A, B."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    case = region_case(d, k)
    if case == 1:
        slacks = [
            (d - 1) * ((d + 1) * A + B) + 1,
            1 - (d + 1) * A - B,
            (d - 1) * (A + (d + 1) * B) + 1,
            1 - A - (d + 1) * B,
        ]
    elif case == 2:
        slacks = [
            (d - 1) * ((d + 1) * A + B) + 1,
            (k * d - 1) - (d - 1) * ((d + 1) * A + B),
            1 - A - (d + 1) * B,
            (d - 1) * ((k * d + k - 1) * B - (d - k + 1) * A) + (k * d + k - 1),
        ]
    elif case == 3:
        slacks = [
            (d - 1) * ((d + 1) * A + B) + 1,
            (k * d - 1) - (d - 1) * ((d + 1) * A + B),
            1 - A - (d + 1) * B,
            1 - A + (d - 1) * B,
            (d * d + k * d + k - 3) - (d - 1) * ((3 * d - k + 3) * A - (k * d + k - 3) * B),
        ]
        conic = dual_conic(d, k, exact=False)
        return np.maximum(np.minimum.reduce(slacks), -conic(A, B))
    else:
        slacks = [
            1 - A + (d - 1) * B,
            1 - A - (d + 1) * B,
            (d - 1) * ((d + 1) * A + B) + 1,
        ]
    return np.minimum.reduce(slacks)
