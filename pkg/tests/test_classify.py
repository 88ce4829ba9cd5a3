from fractions import Fraction

import numpy as np
import pytest

from schmidt_cone.classify import (
    is_k_positive,
    k_block_positivity_max,
    k_positivity_max,
    k_superpositivity_max,
    kpos_margin_grid,
    schmidt_margin_grid,
    schmidt_membership,
    schmidt_number,
)
from schmidt_cone.geometry import (
    map_region_boundary,
    region_contains,
    state_region_boundary,
)
from schmidt_cone.linalg import is_psd
from schmidt_cone.symmetry import InvariantState


def test_identity_map_is_cp():
    for d in (2, 4, 6):
        assert is_k_positive(d, 1, 0, d).member


def test_transpose_is_positive_not_2_positive():
    for d in (3, 4, 5):
        assert is_k_positive(d, 0, 1, 1).member
        v = is_k_positive(d, 0, 1, 2)
        assert v.status == "outside"


def test_shared_vertex_is_boundary_exact():
    # (-2/(d^2+d-2), d/(d^2+d-2)) is shared by the k=3 and k=4 regions at d=4
    pt = (Fraction(-2, 18), Fraction(4, 18))
    assert is_k_positive(4, pt[0], pt[1], 3).status == "boundary"
    assert is_k_positive(4, pt[0], pt[1], 4).status == "boundary"


def test_k_positivity_max_examples():
    assert k_positivity_max(4, 0.0, 0.0).max_k == 4
    assert k_positivity_max(4, 1.0, 0.0).max_k == 4
    assert k_positivity_max(4, 0.0, 1.0).max_k == 1
    prof = k_positivity_max(4, Fraction(-1, 11), 0)
    assert prof.max_k == 3
    assert prof.per_k[2].status == "boundary"


def test_k_positivity_profile_monotone():
    rng = np.random.default_rng(0)
    for _ in range(200):
        d = int(rng.integers(2, 7))
        p, q = rng.uniform(-1, 1, size=2)
        prof = k_positivity_max(d, p, q)
        members = [v.member for v in prof.per_k]
        assert members == sorted(members, reverse=True)


def test_schmidt_number_examples():
    for d in (2, 4, 6):
        assert schmidt_number(d, 0, 0).schmidt_number == 1
        assert schmidt_number(d, 1, 0).schmidt_number == d


def test_schmidt_number_case2_vertex_boundary():
    # trapezoid vertex ((kd+k-1)/(d^2+d-2), -(k+1)/(d^2+d-2)) at d=4, k=2
    cls = schmidt_number(4, Fraction(9, 18), Fraction(-3, 18))
    assert cls.schmidt_number == 2
    assert cls.boundary


def test_isotropic_threshold():
    # known isotropic-state law: SN <= k iff a <= (kd-1)/(d^2-1)
    for d in range(2, 9):
        for k in range(1, d + 1):
            thr = Fraction(k * d - 1, d * d - 1)
            eps = Fraction(1, 10**6)
            assert schmidt_membership(d, thr, 0, k).status == "boundary"
            assert schmidt_membership(d, thr - eps, 0, k).status == "inside"
            if k < d:
                assert schmidt_membership(d, thr + eps, 0, k).status == "outside"


def test_werner_line_schmidt_numbers():
    # Werner states have Schmidt number 1 or 2 over the whole PSD range
    for d in range(2, 9):
        lo, hi = Fraction(-1, d - 1), Fraction(1, d + 1)
        for t in range(21):
            b = lo + (hi - lo) * Fraction(t, 20)
            cls = schmidt_number(d, 0, b)
            assert cls.schmidt_number in (1, 2)


def test_not_a_state():
    cls = schmidt_number(4, 2.0, 0.0)
    assert not cls.is_state
    assert cls.schmidt_number is None


def test_not_a_state_agrees_with_psd_check():
    rng = np.random.default_rng(1)
    d = 3
    for _ in range(60):
        a, b = rng.uniform(-0.8, 1.2, size=2)
        margin = schmidt_margin_grid(d, d, np.array(a), np.array(b))
        if abs(float(margin)) < 1e-6:
            continue
        member = schmidt_number(d, a, b).is_state
        assert member == is_psd(InvariantState(d, a, b).matrix())


def test_schmidt_chain_monotone_on_grid():
    axis = np.linspace(-1, 1, 20)
    for d in (3, 5):
        for a in axis:
            for b in axis:
                per = [schmidt_membership(d, a, b, k).member for k in range(1, d + 1)]
                assert per == sorted(per)


def test_nan_rejected():
    with pytest.raises(ValueError):
        schmidt_number(3, float("nan"), 0.0)
    with pytest.raises(ValueError):
        is_k_positive(3, float("inf"), 0.0, 1)


def test_block_positivity_wrappers():
    assert k_block_positivity_max(4, 1, 0).max_k == 4
    assert k_block_positivity_max(4, 0, 1).max_k == 1


def test_superpositivity_profile():
    prof = k_superpositivity_max(4, 0, 0)
    assert prof.max_k == 4  # depolarizing map is CP, hence d-superpositive
    assert prof.min_k == 1  # and entanglement breaking
    prof = k_superpositivity_max(4, 1, 0)
    assert prof.max_k == 4 and prof.min_k == 4
    prof = k_superpositivity_max(4, 2.0, 0.0)
    assert prof.max_k == 0 and prof.min_k is None


def test_exact_and_float_modes_agree():
    rng = np.random.default_rng(2)
    for _ in range(100):
        d = int(rng.integers(2, 7))
        num = rng.integers(-50, 51, size=2)
        p, q = Fraction(int(num[0]), 64), Fraction(int(num[1]), 64)
        for k in range(1, d + 1):
            ve = is_k_positive(d, p, q, k)
            vf = is_k_positive(d, float(p), float(q), k)
            if ve.status != "boundary":
                assert ve.status == vf.status
            se = schmidt_membership(d, p, q, k)
            sf = schmidt_membership(d, float(p), float(q), k)
            if se.status != "boundary":
                assert se.status == sf.status


def test_margin_grids_match_scalar_path():
    rng = np.random.default_rng(3)
    d = 5
    A = rng.uniform(-0.6, 1.1, size=12)
    B = rng.uniform(-0.6, 1.1, size=12)
    for k in range(1, d + 1):
        gm = kpos_margin_grid(d, k, A, B)
        gs = schmidt_margin_grid(d, k, A, B)
        for i in range(len(A)):
            assert gm[i] == pytest.approx(float(is_k_positive(d, A[i], B[i], k).margin), abs=1e-12)
            assert gs[i] == pytest.approx(float(schmidt_membership(d, A[i], B[i], k).margin), abs=1e-12)


def test_figure_concordance_d4():
    # classifier and boundary generator agree pixel-by-pixel off the boundary
    d = 4
    axis = np.linspace(-0.65, 1.15, 300)
    P, Q = np.meshgrid(axis, axis, indexing="ij")
    for k in range(1, d + 1):
        m_rb = map_region_boundary(d, k, arc_samples=2048)
        s_rb = state_region_boundary(d, k, arc_samples=2048)
        km = kpos_margin_grid(d, k, P, Q)
        sm = schmidt_margin_grid(d, k, P, Q)
        sel = np.abs(km) > 1e-4
        idx = np.nonzero(sel)
        for i, j in zip(idx[0][::7], idx[1][::7]):
            assert (km[i, j] > 0) == region_contains(m_rb, (P[i, j], Q[i, j]), tol=1e-7)
        sel = np.abs(sm) > 1e-4
        idx = np.nonzero(sel)
        for i, j in zip(idx[0][::7], idx[1][::7]):
            assert (sm[i, j] > 0) == region_contains(s_rb, (P[i, j], Q[i, j]), tol=1e-7)
