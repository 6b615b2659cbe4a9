"""Threshold cubics eta(n) and theta(n), the order bound f(alpha), and the sign audit.

Case identifiers name the quotient matrices of the graph families:

* ``B0``  K_1 v (K_{n-4} u 3K_1)
* ``B1``  K_s v (K_{n-3s} u 2sK_1)
* ``B2``  K_s v (K_{n-3s+1} u (2s-1)K_1)
* ``B3``  K_s v (2s-1)K_1, n = 3s - 1
* ``B4``  K_s v 2sK_1, n = 3s
* ``EXT`` K_{n-3} v K_1 v K2-bar
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from specfac.config import DEFAULT, Tolerances
from specfac.poly import Cubic, Quadratic

CASES = ("B0", "B1", "B2", "B3", "B4", "EXT")


class ParameterRangeError(ValueError):
    pass


class OrderBoundWarning(UserWarning):
    """eta/theta evaluated for n below f(alpha)."""


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")


def f_alpha(alpha: float) -> float:
    _check_alpha(alpha)
    if alpha <= 0.5:
        return 14.0
    if alpha <= 2 / 3:
        return 17.0
    if alpha <= 0.75:
        return 20.0
    return 5.0 / (1.0 - alpha) + 1.0


def meets_order_bound(n: int, alpha: float, tol: Tolerances = DEFAULT) -> bool:
    return n >= f_alpha(alpha) - tol.order_bound_slack


def min_order(alpha: float, tol: Tolerances = DEFAULT) -> int:
    """Smallest integer n with n >= f(alpha)."""
    return math.ceil(f_alpha(alpha) - tol.order_bound_slack)


# -- the two threshold cubics -------------------------------------------------


def eta_cubic(n: float, alpha: float) -> Cubic:
    a = alpha
    return Cubic(
        1.0,
        -((a + 1) * n + a - 4),
        a * n**2 + (a**2 - 2 * a - 1) * n - 2 * a + 1,
        -(a**2) * n**2 + (5 * a**2 - 3 * a + 2) * n - 10 * a**2 + 15 * a - 8,
    )


def theta_cubic(n: float, alpha: float) -> Cubic:
    a = alpha
    return Cubic(
        1.0,
        -((a + 1) * n + a - 5),
        a * n**2 + (a**2 - 3 * a - 1) * n - 2 * a + 1,
        -(a**2) * n**2 + (7 * a**2 - 5 * a + 3) * n - 18 * a**2 + 29 * a - 15,
    )


def _domain(n: int, alpha: float, check_domain: bool, name: str) -> None:
    _check_alpha(alpha)
    if check_domain and not meets_order_bound(n, alpha):
        warnings.warn(f"{name}({n}, {alpha}) evaluated below f(alpha) = {f_alpha(alpha):g}", OrderBoundWarning, stacklevel=3)


def eta(n: int, alpha: float, *, check_domain: bool = True, tol: Tolerances = DEFAULT) -> float:
    """Largest root of the coveredness threshold cubic."""
    _domain(n, alpha, check_domain, "eta")
    return eta_cubic(n, alpha).largest_real_root(tol)


def theta(n: int, alpha: float, *, check_domain: bool = True, tol: Tolerances = DEFAULT) -> float:
    """Largest root of the factor-existence threshold cubic."""
    _domain(n, alpha, check_domain, "theta")
    return theta_cubic(n, alpha).largest_real_root(tol)


# -- case matrices and characteristic polynomials -----------------------------


def check_case_range(case_id: str, n: int, s: int) -> None:
    ok = {
        "B0": n >= 6,
        "B1": s >= 1 and n >= 3 * s + 2,
        "B2": s >= 2 and n >= 3 * s + 1,
        "B3": s >= 2 and n == 3 * s - 1,
        "B4": s >= 2 and n == 3 * s,
        "EXT": n >= 5,
    }
    if case_id not in ok:
        raise ParameterRangeError(f"unknown case {case_id!r}")
    if not ok[case_id]:
        raise ParameterRangeError(f"{case_id} not defined for n={n}, s={s}")


def case_matrix(case_id: str, n: int, s: int, alpha: float) -> np.ndarray:
    """The quotient matrix of A_alpha for a case graph, entered as printed."""
    check_case_range(case_id, n, s)
    a = alpha
    b = 1 - a
    if case_id == "B0":
        m = [[a, 0, b], [0, n + a - 5, b], [3 * b, b * (n - 4), a * n - a]]
    elif case_id == "B1":
        m = [[a * n - a * s + s - 1, b * (n - 3 * s), 2 * s * b], [b * s, n + a * s - 3 * s - 1, 0], [b * s, 0, a * s]]
    elif case_id == "B2":
        m = [[a * n - a * s + s - 1, b * (n - 3 * s + 1), b * (2 * s - 1)], [b * s, n + a * s - 3 * s, 0], [b * s, 0, a * s]]
    elif case_id == "B3":
        m = [[2 * a * s + s - a - 1, b * (2 * s - 1)], [b * s, a * s]]
    elif case_id == "B4":
        m = [[2 * a * s + s - 1, 2 * s * b], [b * s, a * s]]
    else:
        m = [[a * (n - 1), b * (n - 3), 2 * b], [b, n + a - 4, 0], [b, 0, a]]
    return np.array(m, dtype=float)


def phi1(n: float, s: float, alpha: float) -> Cubic:
    a = alpha
    return Cubic(
        1.0,
        -((a + 1) * n + (a - 2) * s - 2),
        a * n**2 + (a**2 - a) * s * n - (a + 1) * n - 2 * s**2 - (2 * a - 2) * s + 1,
        -(a**2) * s * n**2
        + (4 * a**2 - 4 * a + 2) * s**2 * n
        + (a**2 + a) * s * n
        - (8 * a**2 - 14 * a + 6) * s**3
        - (2 * a**2 - 2 * a + 2) * s**2
        - a * s,
    )


def phi2(n: float, s: float, alpha: float) -> Cubic:
    a = alpha
    return Cubic(
        1.0,
        -((a + 1) * n + (a - 2) * s - 1),
        a * n**2 + (a**2 - a) * s * n - n - 2 * s**2 - (2 * a - 3) * s,
        -(a**2) * s * n**2
        + (4 * a**2 - 4 * a + 2) * s**2 * n
        - (a**2 - 3 * a + 1) * s * n
        - (8 * a**2 - 14 * a + 6) * s**3
        + (4 * a**2 - 9 * a + 3) * s**2,
    )


def phi3(s: float, alpha: float) -> Quadratic:
    a = alpha
    return Quadratic(1.0, -(3 * a * s + s - a - 1), 5 * a * s**2 - 2 * s**2 - 3 * a * s + s)


def phi4(s: float, alpha: float) -> Quadratic:
    a = alpha
    return Quadratic(1.0, -(3 * a * s + s - 1), 5 * a * s**2 - 2 * s**2 - a * s)


def case_char_poly(case_id: str, n: int, s: int, alpha: float) -> Cubic | Quadratic:
    """Characteristic polynomial of a case quotient matrix, in closed form."""
    check_case_range(case_id, n, s)
    if case_id == "B0":
        return theta_cubic(n, alpha)
    if case_id == "B1":
        return phi1(n, s, alpha)
    if case_id == "B2":
        return phi2(n, s, alpha)
    if case_id == "B3":
        return phi3(s, alpha)
    if case_id == "B4":
        return phi4(s, alpha)
    return eta_cubic(n, alpha)


# -- auxiliary polynomials of the sign argument -------------------------------


def g1(x: float, n: float, s: float, alpha: float) -> float:
    """(phi1 - phi)(x) / (s - 1)."""
    a = alpha
    return (
        (2 - a) * x**2
        - ((a - a**2) * n + 2 * s + 2 * a) * x
        - a**2 * n**2
        + (4 * a**2 - 4 * a + 2) * s * n
        + (5 * a**2 - 3 * a + 2) * n
        - (8 * a**2 - 14 * a + 6) * s**2
        - (10 * a**2 - 16 * a + 8) * s
        - 10 * a**2
        + 15 * a
        - 8
    )


def l1(s: float, n: float, alpha: float) -> float:
    """g1 evaluated at x = n - 3."""
    a = alpha
    return (
        (2 - 2 * a) * n**2
        + ((4 * a**2 - 4 * a) * s + 2 * a**2 + 4 * a - 10) * n
        - (8 * a**2 - 14 * a + 6) * s**2
        - (10 * a**2 - 16 * a + 2) * s
        - 10 * a**2
        + 12 * a
        + 10
    )


def l2(s: float, n: float, alpha: float) -> float:
    """Lower bound for (phi2 - phi) at x = n - 3."""
    a = alpha
    return (
        ((2 - 2 * a) * s + 3 * a - 3) * n**2
        + ((4 * a**2 - 4 * a) * s**2 - (4 * a**2 - 10 * a + 10) * s - 2 * a**2 - 7 * a + 15) * n
        - (8 * a**2 - 14 * a + 6) * s**3
        + (4 * a**2 - 9 * a + 9) * s**2
        - 3 * (a - 3) * s
        + 10 * a**2
        - 12 * a
        - 16
    )


def big_phi1(s: float, n: float, alpha: float) -> float:
    """phi1(n - 3) as a cubic in s."""
    a = alpha
    return (
        2 * (1 - a) * (4 * a - 3) * s**3
        + ((4 * a**2 - 4 * a) * n - 2 * a**2 + 2 * a + 4) * s**2
        + ((2 - 2 * a) * n**2 - (2 * a**2 - 8 * a + 10) * n - 4 * a + 12) * s
        + (2 * a - 2) * n**2
        - (6 * a - 10) * n
        - 12
    )


def big_phi1_ds(s: float, n: float, alpha: float) -> float:
    a = alpha
    return (
        6 * (1 - a) * (4 * a - 3) * s**2
        + 2 * ((4 * a**2 - 4 * a) * n - 2 * a**2 + 2 * a + 4) * s
        + (2 - 2 * a) * n**2
        - (2 * a**2 - 8 * a + 10) * n
        - 4 * a
        + 12
    )


def big_phi2(s: float, n: float, alpha: float) -> float:
    """phi2(n - 3) as a cubic in s."""
    a = alpha
    return (
        2 * (1 - a) * (4 * a - 3) * s**3
        + ((4 * a**2 - 4 * a) * n + 4 * a**2 - 9 * a + 9) * s**2
        + ((2 - 2 * a) * n**2 - (4 * a**2 - 10 * a + 10) * n - 3 * a + 9) * s
        + (3 * a - 3) * n**2
        - (9 * a - 15) * n
        - 18
    )


def big_phi2_ds(s: float, n: float, alpha: float) -> float:
    a = alpha
    return (
        6 * (1 - a) * (4 * a - 3) * s**2
        + 2 * ((4 * a**2 - 4 * a) * n + 4 * a**2 - 9 * a + 9) * s
        + (2 - 2 * a) * n**2
        - (4 * a**2 - 10 * a + 10) * n
        - 3 * a
        + 9
    )


def phi_minus_h(x: float, n: float, alpha: float) -> float:
    """phi(x) - h(x); equals phi(theta) at x = theta."""
    a = alpha
    return -(x**2) + a * n * x - (2 * a**2 - 2 * a + 1) * n + 8 * a**2 - 14 * a + 7


def case1_bound(n: float, alpha: float) -> float:
    """Upper bound for phi(theta) obtained from theta > n - 4."""
    a = alpha
    return -(1 - a) * n**2 + (7 - 2 * a - 2 * a**2) * n + 8 * a**2 - 14 * a - 9


def phi3_at_n_minus_3(s: float, alpha: float) -> float:
    return (4 - 4 * alpha) * s**2 + (12 * alpha - 16) * s - 4 * alpha + 12


def phi3_prime_at_n_minus_3(s: float, alpha: float) -> float:
    return (5 - 3 * alpha) * s + alpha - 7


def phi4_at_n_minus_3(s: float, alpha: float) -> float:
    return (4 - 4 * alpha) * s**2 + (8 * alpha - 12) * s + 6


def phi4_prime_at_n_minus_3(s: float, alpha: float) -> float:
    return (5 - 3 * alpha) * s - 5


# Numeric instances as they appear in print, functions of alpha only.
PRINTED_INSTANCES = {
    "l1_2_14_printed": lambda a: 78 * a**2 - 328 * a + 234,
    "l1_3_14_printed": lambda a: 84 * a**2 - 318 * a + 202,
    "l2_2_14_printed": lambda a: 46 * a**2 - 180 * a + 115,
    "l2_3_14_printed": lambda a: 138 * a**2 - 494 * a + 308,
}


# -- audit ----------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    claim: str
    n: int
    s: int | None
    alpha: float
    value: float
    sign: str
    passed: bool

    def sort_key(self) -> tuple:
        return (self.claim, self.n, -1 if self.s is None else self.s, self.alpha)

    def as_dict(self) -> dict:
        return asdict(self)


def _judge(sign: str, value: float, tol: Tolerances) -> bool:
    if sign == ">0":
        return value > tol.strict_slack
    if sign == ">=0":
        return value >= -tol.weak_slack
    if sign == "<0":
        return value < -tol.strict_slack
    raise ValueError(f"unknown sign {sign!r}")


def _report(claim: str, n: int, s: int | None, alpha: float, value: float, sign: str, tol: Tolerances) -> AuditReport:
    return AuditReport(claim, n, s, alpha, float(value), sign, _judge(sign, value, tol))


def second_eig_bound(case_id: str, n: int, s: int, alpha: float, tol: Tolerances = DEFAULT) -> AuditReport:
    """Middle root of the B1/B2 cubic against n - 3 (B1) or n - 4 (B2)."""
    if case_id not in ("B1", "B2"):
        raise ParameterRangeError("second-eigenvalue bound is only stated for B1 and B2")
    check_case_range(case_id, n, s)
    middle = case_char_poly(case_id, n, s, alpha).roots(tol)[1]
    limit = n - 3 if case_id == "B1" else n - 4
    return _report(f"{case_id}_second_root_below_{'n-3' if case_id == 'B1' else 'n-4'}", n, s, alpha, limit - middle, ">0", tol)


def audit_inequalities(n: int, alpha: float, tol: Tolerances = DEFAULT) -> list[AuditReport]:
    """Evaluate every sign claim of the threshold argument at (n, alpha).

    Claims indexed by s are evaluated for every admissible integer s.
    Failures are reported, never raised.
    """
    _check_alpha(alpha)
    out: list[AuditReport] = []
    add = out.append
    th = theta(n, alpha, check_domain=False, tol=tol)
    et = eta(n, alpha, check_domain=False, tol=tol)

    add(_report("theta_gt_n-4", n, None, alpha, th - (n - 4), ">0", tol))
    add(_report("eta_gt_n-3", n, None, alpha, et - (n - 3), ">0", tol))
    add(_report("theta_lt_eta", n, None, alpha, et - th, ">0", tol))
    add(_report("phi_at_theta", n, None, alpha, eta_cubic(n, alpha)(th), "<0", tol))
    add(_report("phi_minus_h_at_theta", n, None, alpha, phi_minus_h(th, n, alpha), "<0", tol))
    add(_report("case1_bound", n, None, alpha, case1_bound(n, alpha), "<0", tol))

    s_top_1 = (n - 2) // 3
    s_top_2 = (n - 1) // 3
    for s in range(1, s_top_1 + 1):
        add(second_eig_bound("B1", n, s, alpha, tol))
    for s in range(2, s_top_2 + 1):
        add(second_eig_bound("B2", n, s, alpha, tol))

    if alpha <= 0.75:
        for s in range(2, s_top_1 + 1):
            add(_report("l1", n, s, alpha, l1(s, n, alpha), ">0", tol))
            add(_report("g1_eta_minus_l1", n, s, alpha, g1(et, n, s, alpha) - l1(s, n, alpha), ">0", tol))
            add(_report("phi1_at_eta", n, s, alpha, phi1(n, s, alpha)(et), ">0", tol))
        for s in range(2, s_top_2 + 1):
            add(_report("l2", n, s, alpha, l2(s, n, alpha), ">=0", tol))
            add(_report("phi2_at_eta_minus_l2", n, s, alpha, phi2(n, s, alpha)(et) - l2(s, n, alpha), ">0", tol))
            add(_report("phi2_at_eta", n, s, alpha, phi2(n, s, alpha)(et), ">0", tol))
    else:
        for s in range(2, s_top_1 + 1):
            add(_report("Phi1", n, s, alpha, big_phi1(s, n, alpha), ">0", tol))
        for s in range(2, s_top_2 + 1):
            add(_report("Phi2", n, s, alpha, big_phi2(s, n, alpha), ">0", tol))
        if s_top_1 >= 2:
            add(_report("dPhi1_ds_at_2", n, 2, alpha, big_phi1_ds(2, n, alpha), ">0", tol))
            add(_report("dPhi1_ds_at_top", n, None, alpha, big_phi1_ds((n - 2) / 3, n, alpha), "<0", tol))
        if s_top_2 >= 2:
            add(_report("dPhi2_ds_at_2", n, 2, alpha, big_phi2_ds(2, n, alpha), ">0", tol))
            add(_report("dPhi2_ds_at_top", n, None, alpha, big_phi2_ds((n - 1) / 3, n, alpha), "<0", tol))

    if (n + 1) % 3 == 0:
        s = (n + 1) // 3
        add(_report("phi3_at_n-3", n, s, alpha, phi3_at_n_minus_3(s, alpha), ">0", tol))
        add(_report("phi3_prime_at_n-3", n, s, alpha, phi3_prime_at_n_minus_3(s, alpha), ">0", tol))
    if n % 3 == 0:
        s = n // 3
        add(_report("phi4_at_n-3", n, s, alpha, phi4_at_n_minus_3(s, alpha), ">0", tol))
        add(_report("phi4_prime_at_n-3", n, s, alpha, phi4_prime_at_n_minus_3(s, alpha), ">0", tol))
    return out


def printed_instance_reports(alpha: float, tol: Tolerances = DEFAULT) -> list[AuditReport]:
    """The numeric l1/l2 instances at n = 14 exactly as printed (alpha <= 3/4 only)."""
    if alpha > 0.75:
        return []
    return [_report(name, 14, None, alpha, fn(alpha), ">0", tol) for name, fn in PRINTED_INSTANCES.items()]


DEFAULT_ALPHAS = tuple(sorted({round(0.1 * k, 10) for k in range(10)} | {0.5, 2 / 3, 0.75}))


def default_grid(n_max: int = 30, alphas: Iterable[float] = DEFAULT_ALPHAS) -> list[tuple[int, float]]:
    return [(n, a) for a in alphas for n in range(min_order(a), n_max + 1)]


def audit_grid(
    n_max: int = 30,
    alphas: Iterable[float] = DEFAULT_ALPHAS,
    n_min: int | None = None,
    tol: Tolerances = DEFAULT,
) -> list[AuditReport]:
    """Audit every (n, alpha) with max(n_min, f(alpha)) <= n <= n_max, sorted."""
    reports: list[AuditReport] = []
    for a in alphas:
        lo = min_order(a) if n_min is None else max(n_min, min_order(a))
        for n in range(lo, n_max + 1):
            reports.extend(audit_inequalities(n, a, tol))
        reports.extend(printed_instance_reports(a, tol))
    return sorted(reports, key=AuditReport.sort_key)
