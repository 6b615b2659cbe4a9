import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from specfac import thresholds as T
from specfac.families import claim1_graph, extremal_graph
from specfac.poly import Cubic, Quadratic
from specfac.spectral import a_alpha

ALPHAS = [0.0, 0.25, 0.5, 0.6, 2 / 3, 0.7, 0.75, 0.8, 0.9]


def bisect_largest_root(fn, lo, hi, iters=200):
    """Largest sign change of fn on [lo, hi], assuming fn > 0 at hi."""
    assert fn(hi) > 0
    for _ in range(iters):
        mid = (lo + hi) / 2
        if fn(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def det_char(m):
    eye = np.eye(len(m))
    return lambda x: np.linalg.det(x * eye - m)


def test_eta_14_0_by_bisection():
    m = T.case_matrix("EXT", 14, 0, 0.0)
    ref = bisect_largest_root(det_char(m), 11 - 0.5, 14.0)
    assert T.eta(14, 0.0) == pytest.approx(ref, abs=1e-9)
    assert T.eta(14, 0.0) == pytest.approx(11.0153, abs=1e-4)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", [14, 20, 26, 30])
def test_eta_is_extremal_radius(n, alpha):
    g = extremal_graph(n).graph
    ref = float(np.linalg.eigvalsh(a_alpha(g, alpha))[-1])
    assert T.eta(n, alpha, check_domain=False) == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", [6, 14, 23])
def test_theta_is_claim1_radius(n, alpha):
    g = claim1_graph(n).graph
    ref = float(np.linalg.eigvalsh(a_alpha(g, alpha))[-1])
    assert T.theta(n, alpha, check_domain=False) == pytest.approx(ref, abs=1e-9)


CASE_GRID = [
    ("B0", 9, 0), ("B0", 14, 0), ("EXT", 14, 0),
    ("B1", 14, 1), ("B1", 14, 4), ("B1", 20, 3),
    ("B2", 13, 4), ("B2", 19, 5),
    ("B3", 14, 5), ("B4", 15, 5), ("B4", 24, 8),
]


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("case", CASE_GRID, ids=lambda c: f"{c[0]}-{c[1]}-{c[2]}")
def test_closed_form_char_poly_matches_matrix(case, alpha):
    cid, n, s = case
    m = T.case_matrix(cid, n, s, alpha)
    p = T.case_char_poly(cid, n, s, alpha)
    assert np.allclose(p.coefficients, np.poly(m), atol=1e-8, rtol=0)


def test_f_alpha_values():
    assert T.f_alpha(0.0) == 14 and T.f_alpha(0.5) == 14
    assert T.f_alpha(0.51) == 17 and T.f_alpha(2 / 3) == 17
    assert T.f_alpha(0.7) == 20 and T.f_alpha(0.75) == 20
    assert T.f_alpha(0.8) == pytest.approx(26)
    assert T.min_order(0.8) == 26
    assert T.min_order(0.9) == 51
    with pytest.raises(ValueError):
        T.f_alpha(1.0)


def test_order_bound_warning():
    with pytest.warns(T.OrderBoundWarning):
        T.eta(13, 0.0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        T.eta(26, 0.8)
        T.eta(13, 0.0, check_domain=False)


def test_case_ranges():
    with pytest.raises(T.ParameterRangeError):
        T.case_matrix("B1", 10, 3, 0.0)
    with pytest.raises(T.ParameterRangeError):
        T.case_matrix("B3", 15, 5, 0.0)
    with pytest.raises(T.ParameterRangeError):
        T.case_matrix("B9", 15, 5, 0.0)


@given(st.floats(0.0, 0.75))
def test_printed_l1_instances(alpha):
    # The s = 3 instance agrees with the general formula.
    assert T.l1(3, 14, alpha) == pytest.approx(T.PRINTED_INSTANCES["l1_3_14_printed"](alpha), abs=1e-9)
    assert T.l2(3, 14, alpha) == pytest.approx(T.PRINTED_INSTANCES["l2_3_14_printed"](alpha), abs=1e-9)
    # The printed s = 2 instances differ from the formula by 20 alpha and by 1; both stay positive.
    assert T.l1(2, 14, alpha) - T.PRINTED_INSTANCES["l1_2_14_printed"](alpha) == pytest.approx(-20 * alpha, abs=1e-9)
    assert T.l2(2, 14, alpha) - T.PRINTED_INSTANCES["l2_2_14_printed"](alpha) == pytest.approx(1.0, abs=1e-9)
    for fn in T.PRINTED_INSTANCES.values():
        assert fn(alpha) > 0


@pytest.mark.parametrize("alpha", T.DEFAULT_ALPHAS)
def test_audit_passes_to_order_40(alpha):
    for n in range(T.min_order(alpha), 41):
        bad = [r for r in T.audit_inequalities(n, alpha) if not r.passed]
        assert not bad, bad[:3]


def test_audit_grid_sorted_and_complete():
    reps = T.audit_grid()
    assert reps == sorted(reps, key=T.AuditReport.sort_key)
    assert {r.claim for r in reps} >= {"theta_gt_n-4", "eta_gt_n-3", "theta_lt_eta", "l1", "l2", "Phi1", "Phi2"}
    assert all(r.passed for r in reps)


def test_audit_reports_failures_without_raising():
    rep = T._report("x", 1, None, 0.0, -1.0, ">0", T.DEFAULT)
    assert not rep.passed


@given(
    st.floats(-50, 50, allow_nan=False),
    st.floats(-50, 50, allow_nan=False),
    st.floats(-50, 50, allow_nan=False),
)
def test_cubic_roots_from_factors(r1, r2, r3):
    c = Cubic(1.0, -(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3)
    got = c.roots()
    scale = max(1.0, abs(r1), abs(r2), abs(r3))
    top, second, _ = sorted((r1, r2, r3), reverse=True)
    gap = top - second
    # A root of multiplicity k is only determined to about eps**(1/k) relative accuracy.
    tol = 1e-9 * scale if gap > 1e-2 * scale else 2e-5 * scale
    assert got[0] == pytest.approx(top, abs=tol)


def test_cubic_one_real_root():
    # (x - 2)(x^2 + 1)
    c = Cubic(1.0, -2.0, 1.0, -2.0)
    assert c.roots() == pytest.approx([2.0])


def test_quadratic_roots():
    assert Quadratic(1.0, -3.0, 2.0).roots() == pytest.approx([2.0, 1.0])
    assert Quadratic(1.0, 0.0, 1.0).roots() == []
    assert Quadratic(1.0, -1e8, 1.0).roots()[1] == pytest.approx(1e-8, rel=1e-12)
