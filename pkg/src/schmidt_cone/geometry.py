"""Plane geometry of the positivity and Schmidt-number regions.

Implements the boundary conic of the k-positivity region, conic
classification, the pairing-induced linear isomorphism between witness and
state coordinates, pole-polar duality, five-point conic fitting (exact
rational or floating point), and region boundary construction with arc
sampling for plots.

Exact mode: vertex formulas, the pairing map and the five-point fit are
evaluated in rational arithmetic whenever the inputs are rationals, so
boundary classification never depends on rounding.  Arc sampling is always
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "Conic",
    "HalfPlane",
    "Arc",
    "RegionBoundary",
    "classify_conic",
    "kpos_conic",
    "pairing_map",
    "pairing_map_inv",
    "witness_halfplane",
    "pole_of_tangent",
    "conic_through_five_points",
    "dual_tangency_points",
    "dual_tangent_lines",
    "dual_conic",
    "tangency_discriminant",
    "region_case",
    "map_region_vertices",
    "state_region_vertices",
    "map_region_boundary",
    "state_region_boundary",
    "conic_arc_points",
    "region_contains",
    "region_payload",
    "region_csv",
    "region_svg",
]


def _is_exact(*vals) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in vals)


def _q(num: int, den: int, exact: bool):
    return Fraction(num, den) if exact else num / den


# ---------------------------------------------------------------------------
# Conics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Conic:
    """Quadratic plane curve A x^2 + B xy + C y^2 + D x + E y + F = 0.

    Coefficients may be ints/Fractions (exact) or floats.
    """

    A: object
    B: object
    C: object
    D: object
    E: object
    F: object

    def coefficients(self) -> tuple:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def __call__(self, x, y):
        return (
            self.A * x * x
            + self.B * x * y
            + self.C * y * y
            + self.D * x
            + self.E * y
            + self.F
        )

    def gradient(self, x, y) -> tuple:
        return (2 * self.A * x + self.B * y + self.D, self.B * x + 2 * self.C * y + self.E)

    def discriminant(self):
        return self.B * self.B - 4 * self.A * self.C

    def as_float(self) -> "Conic":
        coeffs = [float(v) for v in self.coefficients()]
        scale = max(abs(v) for v in coeffs)
        if scale == 0.0:
            raise ValueError("zero conic")
        return Conic(*(v / scale for v in coeffs))

    def classify(self, tol: float = 1e-12) -> str:
        """One of 'ellipse' | 'parabola' | 'hyperbola' | 'degenerate'.

        Classified by the sign of B^2 - 4AC, with degeneracy decided by the
        determinant of the full 3x3 matrix of the quadratic form.
        """
        A, B, C, D, E, F = self.coefficients()
        disc = self.discriminant()
        # determinant of [[2A, B, D], [B, 2C, E], [D, E, 2F]]
        det3 = (
            2 * A * (4 * C * F - E * E)
            - B * (2 * B * F - D * E)
            + D * (B * E - 2 * C * D)
        )
        if _is_exact(*self.coefficients()):
            if (A == 0 and B == 0 and C == 0) or det3 == 0:
                return "degenerate"
            if disc < 0:
                return "ellipse"
            if disc > 0:
                return "hyperbola"
            return "parabola"
        scale = max(abs(float(v)) for v in self.coefficients())
        if scale == 0.0:
            return "degenerate"
        if max(abs(float(A)), abs(float(B)), abs(float(C))) <= tol * scale:
            return "degenerate"
        if abs(float(det3)) <= tol * scale**3:
            return "degenerate"
        if float(disc) < -tol * scale**2:
            return "ellipse"
        if float(disc) > tol * scale**2:
            return "hyperbola"
        return "parabola"


def classify_conic(conic: Conic, tol: float = 1e-12) -> str:
    return conic.classify(tol)


def kpos_conic(d: int, k: int, exact: bool = False) -> Conic:
    """The boundary conic of the k-positivity region (integer coefficients).

    A = kd-1, B = -(d^3 - kd^2 - kd - d + 2), C = d-1, D = -(kd-2),
    E = -(d-2), F = -1.  Constructible for any k; geometrically relevant for
    d/2 < k < d.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    coeffs = (
        k * d - 1,
        -(d**3 - k * d**2 - k * d - d + 2),
        d - 1,
        -(k * d - 2),
        -(d - 2),
        -1,
    )
    return Conic(*coeffs) if exact else Conic(*(float(v) for v in coeffs))


# ---------------------------------------------------------------------------
# Pairing map and pole-polar duality
# ---------------------------------------------------------------------------


def pairing_map(d: int, pt: tuple) -> tuple:
    """Linear isomorphism sending a witness point to its state half-plane normal.

    (x, y) -> -(d-1) * ((d+1)x + y, x + (d+1)y).  Exact when the input is.
    """
    x, y = pt
    return (-(d - 1) * ((d + 1) * x + y), -(d - 1) * (x + (d + 1) * y))


def pairing_map_inv(d: int, pt: tuple) -> tuple:
    """Exact inverse of pairing_map; determinant (d-1)^2 (d^2 + 2d) != 0."""
    u, v = pt
    den = (d - 1) * (d * d + 2 * d)
    if _is_exact(u, v):
        return (Fraction(v - (d + 1) * u, den), Fraction(u - (d + 1) * v, den))
    return ((v - (d + 1) * u) / den, (u - (d + 1) * v) / den)


@dataclass(frozen=True)
class HalfPlane:
    """Constraint nx * x + ny * y <= c with (nx, ny) != (0, 0)."""

    nx: object
    ny: object
    c: object

    def __post_init__(self):
        if self.nx == 0 and self.ny == 0:
            raise ValueError("half-plane normal must be nonzero")

    def slack(self, pt):
        return self.c - self.nx * pt[0] - self.ny * pt[1]

    def contains(self, pt, tol=0) -> bool:
        return self.slack(pt) >= -tol


def witness_halfplane(d: int, p, q) -> HalfPlane:
    """Half-plane constraint on states induced by the extreme witness (p, q)."""
    nx, ny = pairing_map(d, (p, q))
    return HalfPlane(nx, ny, 1)


def pole_of_tangent(conic: Conic, pt: tuple, tol: float = 1e-9) -> tuple:
    """Pole (w.r.t. the unit circle) of the tangent line to the conic at pt.

    pt must lie on the conic.  Raises if the tangent passes through the
    origin (zero denominator).
    """
    x, y = pt
    val = conic(x, y)
    exact = _is_exact(x, y, *conic.coefficients())
    if exact:
        if val != 0:
            raise ValueError("point does not lie on the conic")
    else:
        scale = max(abs(float(c)) for c in conic.coefficients())
        if abs(float(val)) > tol * max(1.0, scale):
            raise ValueError(f"point not on conic (residual {float(val):.3e})")
    den = conic.D * x + conic.E * y + 2 * conic.F
    if (exact and den == 0) or (not exact and abs(float(den)) < 1e-14):
        raise ValueError("tangent line passes through the origin; pole undefined")
    num_x = 2 * conic.A * x + conic.B * y + conic.D
    num_y = 2 * conic.C * y + conic.B * x + conic.E
    if exact:
        return (-Fraction(num_x, 1) / den, -Fraction(num_y, 1) / den)
    return (-num_x / den, -num_y / den)


# ---------------------------------------------------------------------------
# Five-point conic fit
# ---------------------------------------------------------------------------


def _exact_nullvector(rows: list[list[Fraction]]) -> list[Fraction]:
    """Nullspace vector of a 5x6 rational system via Gauss-Jordan elimination."""
    rows = [[Fraction(v) for v in row] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(6):
        piv = next((i for i in range(r, 5) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(5):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == 5:
            break
    if len(pivot_cols) < 5:
        raise ValueError("degenerate configuration: points do not determine a unique conic")
    free = next(c for c in range(6) if c not in pivot_cols)
    sol = [Fraction(0)] * 6
    sol[free] = Fraction(1)
    for i, c in enumerate(pivot_cols):
        sol[c] = -rows[i][free]
    return sol


def _primitive_integers(sol: list[Fraction]) -> list[int]:
    den_lcm = 1
    for v in sol:
        den_lcm = den_lcm * v.denominator // math.gcd(den_lcm, v.denominator)
    ints = [int(v * den_lcm) for v in sol]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return [v // g for v in ints] if g else ints


def conic_through_five_points(points, interior=None) -> Conic:
    """Conic through five points in general position.

    Solves the homogeneous 5x6 system in the monomials (x^2, xy, y^2, x, y, 1).
    With exact rational points the nullspace is computed exactly and the
    coefficients are reduced to primitive integers; otherwise an SVD
    nullvector is used.  If ``interior`` is given, the sign is normalized so
    the conic evaluates <= 0 there.  Raises on rank-deficient configurations.
    """
    pts = [tuple(p) for p in points]
    if len(pts) != 5:
        raise ValueError("exactly five points required")
    exact = all(_is_exact(x, y) for x, y in pts)
    if exact:
        rows = [[x * x, x * y, y * y, x, y, Fraction(1)] for x, y in pts]
        coeffs = _primitive_integers(_exact_nullvector(rows))
        conic = Conic(*coeffs)
    else:
        M = np.array([[x * x, x * y, y * y, x, y, 1.0] for x, y in pts], dtype=float)
        _, s, vh = np.linalg.svd(M)
        if s[4] <= 1e-10 * s[0]:
            raise ValueError("degenerate configuration: points do not determine a unique conic")
        vec = vh[-1]
        vec = vec / np.max(np.abs(vec))
        conic = Conic(*(float(v) for v in vec))
    if interior is not None:
        val = conic(interior[0], interior[1])
        if (exact and val > 0) or (not exact and float(val) > 0.0):
            conic = Conic(*(-v for v in conic.coefficients()))
    return conic


# ---------------------------------------------------------------------------
# Dual conic of the k-positivity arc
# ---------------------------------------------------------------------------


def _check_case3(d: int, k: int):
    if not (2 <= d and 2 * k > d and k < d):
        raise ValueError(f"k={k} out of range d/2 < k < d for d={d}")


def dual_tangency_points(d: int, k: int, exact: bool = True) -> list[tuple]:
    """The five tangency points of the dual conic in state coordinates.

    They are the images of the five rational points of the positivity conic
    (in witness coordinates) under pole-of-tangent followed by the inverse
    pairing map.
    """
    _check_case3(d, k)
    D2 = d * d + d - 2
    pts = [
        (Fraction(-d, k * D2), Fraction(d * d - k * d + d - 2 * k, k * D2)),
        (Fraction(d * d - k * d + d - k - 1, D2), Fraction(-(d - k + 1), D2)),
        (Fraction(2 * k * d - d * d + 2 * k - d - 2, D2), Fraction(2 * d - 2 * k, D2)),
        (
            Fraction(k * k * d + k * k + d - 3 * k, k * D2),
            Fraction(-(d - k + 1) * (d - k), k * D2),
        ),
        (
            Fraction(d, 3 * d - 2 * k),
            Fraction(-(2 * d - 2 * k), (d - 1) * (3 * d - 2 * k)),
        ),
    ]
    if exact:
        return pts
    return [(float(x), float(y)) for x, y in pts]


def dual_tangent_lines(d: int, k: int) -> list[HalfPlane]:
    """The five lines (as n.x <= c half-planes) tangent to the dual conic.

    Listed in the same order as dual_tangency_points; the state region lies on
    the <= side of each.
    """
    _check_case3(d, k)
    return [
        HalfPlane(-(d + 1) * (d - 1), -(d - 1), 1),  # (d+1)x + y >= -1/(d-1)
        HalfPlane(-(d - 1), -(d + 1) * (d - 1), 1),  # x + (d+1)y >= -1/(d-1)
        HalfPlane(1, d + 1, 1),  # x + (d+1)y <= 1
        HalfPlane((d + 1) * (d - 1), d - 1, k * d - 1),  # (d+1)x + y <= (kd-1)/(d-1)
        HalfPlane(1, -(d - 1), 1),  # x - (d-1)y <= 1
    ]


@lru_cache(maxsize=None)
def _dual_conic_exact(d: int, k: int) -> Conic:
    pts = dual_tangency_points(d, k, exact=True)
    cx = sum(p[0] for p in pts) / 5
    cy = sum(p[1] for p in pts) / 5
    return conic_through_five_points(pts, interior=(cx, cy))


def dual_conic(d: int, k: int, exact: bool = True) -> Conic:
    """The conic through the five dual tangency points (an ellipse).

    Fitted exactly in rational arithmetic and reduced to primitive integer
    coefficients, sign-normalized so the centroid of the tangency points
    evaluates <= 0 (the filled ellipse is the <= 0 side).
    """
    _check_case3(d, k)
    conic = _dual_conic_exact(d, k)
    return conic if exact else conic.as_float()


def tangency_discriminant(conic: Conic, line: HalfPlane):
    """Discriminant of the conic restricted to the boundary line of a half-plane.

    Zero iff the line n.x = c is tangent to the conic.  Exact for exact
    inputs.  Raises if the restriction is not genuinely quadratic.
    """
    nx, ny, c = line.nx, line.ny, line.c
    exact = _is_exact(nx, ny, c, *conic.coefficients())
    # rational point on the line plus direction (ny, -nx)
    if ny != 0:
        x0, y0 = 0, Fraction(c, ny) if exact else c / ny
    else:
        x0, y0 = Fraction(c, nx) if exact else c / nx, 0
    ux, uy = ny, -nx
    A, B, C = conic.A, conic.B, conic.C
    a = A * ux * ux + B * ux * uy + C * uy * uy
    gx, gy = conic.gradient(x0, y0)
    b = gx * ux + gy * uy
    c0 = conic(x0, y0)
    if (exact and a == 0) or (not exact and abs(float(a)) < 1e-300):
        raise ValueError("line direction is asymptotic for this conic")
    return b * b - 4 * a * c0


# ---------------------------------------------------------------------------
# Region boundaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arc:
    """A conic arc from start to end with sampled points (endpoints included)."""

    conic: Conic
    start: tuple
    end: tuple
    samples: tuple


@dataclass(frozen=True)
class RegionBoundary:
    """Closed region boundary: straight segments through vertices, then arcs.

    The traversal runs vertices[0] -> ... -> vertices[-1]; if arcs are present
    they continue the traversal back to vertices[0], otherwise the polygon
    closes with a final straight segment.
    """

    vertices: tuple
    arcs: tuple = ()
    closed: bool = True


def region_case(d: int, k: int) -> int:
    """Which of the four geometric cases (k, d) falls in: 1, 2, 3 or 4."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not 1 <= k <= d:
        raise ValueError(f"k={k} out of range 1..{d}")
    if k == 1:
        return 1
    if 2 * k <= d:
        return 2
    if k < d:
        return 3
    return 4


def map_region_vertices(d: int, k: int, exact: bool = False) -> list[tuple]:
    """Corner points of the k-positivity region, in traversal order."""
    case = region_case(d, k)
    if case == 1:
        return [
            (_q(1, 1, exact), _q(0, 1, exact)),
            (_q(0, 1, exact), _q(-1, d - 1, exact)),
            (_q(-1, d - 1, exact), _q(0, 1, exact)),
            (_q(0, 1, exact), _q(1, 1, exact)),
        ]
    if case == 2:
        return [
            (_q(1, 1, exact), _q(0, 1, exact)),
            (_q(0, 1, exact), _q(-1, d - 1, exact)),
            (_q(-1, k * d - 1, exact), _q(0, 1, exact)),
            (_q(-1, k * d + k - 1, exact), _q(k, k * d + k - 1, exact)),
        ]
    D2 = d * d + d - 2
    if case == 3:
        # arc of the positivity conic closes the boundary from the last vertex
        # back to the first, through the second quadrant
        return [
            (_q(-2, D2, exact), _q(d, D2, exact)),
            (_q(1, 1, exact), _q(0, 1, exact)),
            (_q(0, 1, exact), _q(-1, d - 1, exact)),
            (_q(-1, k * d - 1, exact), _q(0, 1, exact)),
        ]
    return [
        (_q(1, 1, exact), _q(0, 1, exact)),
        (_q(0, 1, exact), _q(-1, d - 1, exact)),
        (_q(-2, D2, exact), _q(d, D2, exact)),
    ]


def state_region_vertices(d: int, k: int, exact: bool = False) -> list[tuple]:
    """Corner points of the Schmidt-number-<=k region, in traversal order."""
    case = region_case(d, k)
    D2 = d * d + d - 2
    if case == 1:
        return [
            (_q(-2, D2, exact), _q(d, D2, exact)),
            (_q(1, d + 2, exact), _q(1, d + 2, exact)),
            (_q(d, D2, exact), _q(-2, D2, exact)),
            (_q(-1, D2, exact), _q(-1, D2, exact)),
        ]
    if case == 2:
        return [
            (_q(-2, D2, exact), _q(d, D2, exact)),
            (_q(k * d + k - 2, D2, exact), _q(d - k, D2, exact)),
            (_q(k * d + k - 1, D2, exact), _q(-(k + 1), D2, exact)),
            (_q(0, 1, exact), _q(-1, d - 1, exact)),
        ]
    if case == 3:
        # traversal ends at the first arc endpoint; the elliptic arc returns
        # to the first vertex
        return [
            (_q(d, 3 * d - 2 * k, exact), _q(-(2 * d - 2 * k), (d - 1) * (3 * d - 2 * k), exact)),
            (_q(0, 1, exact), _q(-1, d - 1, exact)),
            (_q(-2, D2, exact), _q(d, D2, exact)),
            (_q(k * d + k - 2, D2, exact), _q(d - k, D2, exact)),
            (
                _q(k * k * d + k * k + d - 3 * k, k * D2, exact),
                _q(-(d - k + 1) * (d - k), k * D2, exact),
            ),
        ]
    return [
        (_q(1, 1, exact), _q(0, 1, exact)),
        (_q(0, 1, exact), _q(-1, d - 1, exact)),
        (_q(-2, D2, exact), _q(d, D2, exact)),
    ]


def conic_arc_points(conic: Conic, start, end, n: int, anchor) -> list[tuple]:
    """n points on the conic arc from start to end (endpoints exact).

    Parameterized by the pencil of chords through ``anchor``, a point on the
    conic away from the arc: each chord meets the conic in exactly one other
    point, and the chord angle varies monotonically along a convex arc.  This
    avoids vertical-branch issues of solving for y over an x grid.
    """
    if n < 2:
        raise ValueError("need at least the two endpoints")
    ax, ay = float(anchor[0]), float(anchor[1])
    A, B, C = float(conic.A), float(conic.B), float(conic.C)
    c0 = float(conic(ax, ay))
    th0 = math.atan2(float(start[1]) - ay, float(start[0]) - ax)
    th1 = math.atan2(float(end[1]) - ay, float(end[0]) - ax)
    delta = math.remainder(th1 - th0, 2 * math.pi)
    pts = [(float(start[0]), float(start[1]))]
    gx, gy = conic.gradient(ax, ay)
    gx, gy = float(gx), float(gy)
    for i in range(1, n - 1):
        th = th0 + delta * (i / (n - 1))
        ux, uy = math.cos(th), math.sin(th)
        a = A * ux * ux + B * ux * uy + C * uy * uy
        b = gx * ux + gy * uy
        if abs(a) < 1e-300:
            raise ValueError("chord direction is asymptotic for this conic")
        disc = max(b * b - 4 * a * c0, 0.0)
        qq = -(b + math.copysign(math.sqrt(disc), b)) / 2.0
        roots = [qq / a]
        if qq != 0.0:
            roots.append(c0 / qq)
        t = max(roots, key=abs)  # the non-anchor intersection
        pts.append((ax + t * ux, ay + t * uy))
    pts.append((float(end[0]), float(end[1])))
    return pts


def map_region_boundary(d: int, k: int, arc_samples: int = 64) -> RegionBoundary:
    """Boundary of the k-positivity region with the conic arc sampled."""
    case = region_case(d, k)
    verts = tuple(map_region_vertices(d, k, exact=False))
    if case != 3:
        return RegionBoundary(vertices=verts)
    conic = kpos_conic(d, k)
    samples = conic_arc_points(conic, verts[-1], verts[0], arc_samples, anchor=(1.0, 0.0))
    arc = Arc(conic=conic, start=verts[-1], end=verts[0], samples=tuple(samples))
    return RegionBoundary(vertices=verts, arcs=(arc,))


def state_region_boundary(d: int, k: int, arc_samples: int = 64) -> RegionBoundary:
    """Boundary of the Schmidt-number-<=k region with the elliptic arc sampled."""
    case = region_case(d, k)
    verts = tuple(state_region_vertices(d, k, exact=False))
    if case != 3:
        return RegionBoundary(vertices=verts)
    conic = dual_conic(d, k, exact=False)
    # anchor on the complementary part of the ellipse (first tangency point)
    anchor = dual_tangency_points(d, k, exact=False)[0]
    samples = conic_arc_points(conic, verts[-1], verts[0], arc_samples, anchor=anchor)
    arc = Arc(conic=conic, start=verts[-1], end=verts[0], samples=tuple(samples))
    return RegionBoundary(vertices=verts, arcs=(arc,))


def _traversal_points(rb: RegionBoundary) -> list[tuple]:
    pts = [(float(x), float(y)) for x, y in rb.vertices]
    for arc in rb.arcs:
        pts.extend((float(x), float(y)) for x, y in arc.samples[1:-1])
    return pts


def region_contains(rb: RegionBoundary, pt, tol: float = 1e-9) -> bool:
    """Convex containment test against the polyline (vertices + arc samples)."""
    pts = _traversal_points(rb)
    n = len(pts)
    x, y = float(pt[0]), float(pt[1])
    # orientation via the shoelace sum
    area2 = sum(
        pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1] for i in range(n)
    )
    orient = 1.0 if area2 >= 0 else -1.0
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        cross = (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)
        # normalize to a signed distance so tol is edge-length independent
        edge = math.hypot(x1 - x0, y1 - y0)
        if edge > 0 and orient * cross < -tol * edge:
            return False
    return True


# ---------------------------------------------------------------------------
# Serialization: JSON payload, CSV, SVG
# ---------------------------------------------------------------------------


def _fmt(v: float) -> str:
    return format(float(v) + 0.0, ".9g")


def region_payload(rb: RegionBoundary, **meta) -> dict:
    """JSON-serializable dict for a region boundary."""
    payload = dict(meta)
    payload["closed"] = rb.closed
    payload["vertices"] = [[float(x), float(y)] for x, y in rb.vertices]
    payload["arcs"] = [
        {
            "conic": [float(c) for c in arc.conic.coefficients()],
            "start": [float(arc.start[0]), float(arc.start[1])],
            "end": [float(arc.end[0]), float(arc.end[1])],
            "samples": [[float(x), float(y)] for x, y in arc.samples],
        }
        for arc in rb.arcs
    ]
    return payload


def region_csv(rb: RegionBoundary) -> str:
    """Labeled boundary points: kind,index,x,y."""
    lines = ["kind,index,x,y"]
    for i, (x, y) in enumerate(rb.vertices):
        lines.append(f"vertex,{i},{_fmt(x)},{_fmt(y)}")
    for j, arc in enumerate(rb.arcs):
        for i, (x, y) in enumerate(arc.samples):
            lines.append(f"arc{j},{i},{_fmt(x)},{_fmt(y)}")
    return "\n".join(lines) + "\n"


DEFAULT_SVG_STYLE = {
    "axis.stroke": "#999999",
    "axis.width": "0.006",
    "edge.stroke": "#1f77b4",
    "edge.width": "0.012",
    "arc.stroke": "#d62728",
    "arc.width": "0.012",
    "vertex.fill": "#000000",
    "vertex.radius": "0.02",
}

# math coordinates, y axis flipped at write time
_VIEW = (-0.7, -0.7, 1.2, 1.2)


def region_svg(rb: RegionBoundary, style: dict | None = None) -> str:
    """SVG document: one path per straight segment, one per sampled arc."""
    st = dict(DEFAULT_SVG_STYLE)
    if style:
        st.update(style)
    x0, y0, x1, y1 = _VIEW
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(-y1)} '
        f'{_fmt(x1 - x0)} {_fmt(y1 - y0)}">',
        f'<line class="axis" x1="{_fmt(x0)}" y1="0" x2="{_fmt(x1)}" y2="0" '
        f'stroke="{st["axis.stroke"]}" stroke-width="{st["axis.width"]}"/>',
        f'<line class="axis" x1="0" y1="{_fmt(-y1)}" x2="0" y2="{_fmt(-y0)}" '
        f'stroke="{st["axis.stroke"]}" stroke-width="{st["axis.width"]}"/>',
    ]
    verts = [(float(x), float(y)) for x, y in rb.vertices]
    segments = list(zip(verts[:-1], verts[1:]))
    if rb.closed and not rb.arcs:
        segments.append((verts[-1], verts[0]))
    for (ax, ay), (bx, by) in segments:
        parts.append(
            f'<path class="edge" d="M {_fmt(ax)} {_fmt(-ay)} L {_fmt(bx)} {_fmt(-by)}" '
            f'stroke="{st["edge.stroke"]}" stroke-width="{st["edge.width"]}" fill="none"/>'
        )
    for arc in rb.arcs:
        d_attr = " L ".join(f"{_fmt(x)} {_fmt(-y)}" for x, y in arc.samples)
        parts.append(
            f'<path class="arc" d="M {d_attr}" '
            f'stroke="{st["arc.stroke"]}" stroke-width="{st["arc.width"]}" fill="none"/>'
        )
    for x, y in verts:
        parts.append(
            f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(-y)}" '
            f'r="{st["vertex.radius"]}" fill="{st["vertex.fill"]}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
