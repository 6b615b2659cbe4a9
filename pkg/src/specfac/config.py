"""Numerical tolerances shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # Jacobi stops once off-diagonal Frobenius norm <= jacobi_rel * ||m||_F.
    jacobi_rel: float = 1e-12
    jacobi_max_sweeps: int = 100
    power_tol: float = 1e-12
    power_max_iter: int = 100_000
    # Newton residual bound, relative to max(1, |c0|, |c1|, |c2|) of the monic polynomial.
    newton_residual: float = 1e-9
    newton_max_iter: int = 100
    # Strict inequality audited as value > strict_slack, weak as value >= -weak_slack.
    strict_slack: float = 1e-9
    weak_slack: float = 1e-9
    # Dead zone around eta for the "rho > eta" comparison.
    tie: float = 1e-7
    # Slack for "n >= f(alpha)" when f(alpha) is computed in floating point.
    order_bound_slack: float = 1e-9


DEFAULT = Tolerances()
